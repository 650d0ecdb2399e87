// antialg command-line front end.  Exit codes: 0 all checks pass, 1 violations, 2 bad input.
#include "antialg/associator.hpp"
#include "antialg/axioms.hpp"
#include "antialg/catalog.hpp"
#include "antialg/cohomology.hpp"
#include "antialg/derivations.hpp"
#include "antialg/geometry.hpp"
#include "antialg/representations.hpp"
#include "antialg/spec_io.hpp"
#include "antialg/superization.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>

using namespace antialg;
using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string algebra;
    std::string spec;
    std::string module = "trivial";
    long window = 4;
    int max_degree = 2;
    long degree = 1;
    std::string mode;
    bool json = false;
};

struct Outcome {
    json j;
    std::ostringstream text;
    bool ok = true;
};

std::string describe(const Report& r)
{
    std::ostringstream os;
    const auto failing = r.failing_identities();
    os << r.subject << " [" << r.window << "]: " << (r.checked.size() - failing.size()) << "/" << r.checked.size()
       << " identity families pass (" << r.evaluations << " evaluations)\n";
    for (const auto& id : failing) {
        const Violation* v = r.first(id);
        os << "  FAIL " << id << " at (";
        for (std::size_t i = 0; i < v->witness.size(); ++i)
            os << (i ? ", " : "") << v->witness[i];
        os << "): " << (v->defect.is_zero() ? v->detail : v->defect.str()) << "\n";
    }
    return os.str();
}

void add_report(Outcome& out, const std::string& key, const Report& r)
{
    out.j[key] = r.to_json();
    out.text << describe(r);
    out.ok = out.ok && r.passed();
}

AlgebraTable resolve_algebra(const Options& o)
{
    if (!o.spec.empty())
        return load_spec(o.spec);
    if (o.algebra.empty())
        throw InputError("one of --algebra or --spec is required");
    std::string name = o.algebra;
    if (name == "ak1" || name == "k1")
        name += ":" + std::to_string(o.window);
    return build_builtin(name);
}

AntiModule resolve_module(const Options& o)
{
    if (o.module != "trivial" && o.module != "adjoint" && o.module != "coadjoint")
        return load_module(o.module);
    const AlgebraTable a = resolve_algebra(o);
    if (o.module == "trivial")
        return trivial_module(a);
    if (o.module == "adjoint")
        return adjoint_module(a);
    return coadjoint_module(a);
}

void require_finite(const AlgebraTable& a, const char* what)
{
    if (a.is_family())
        throw InputError(std::string(what) + " needs a finite algebra");
}

void require_window(long w, long min)
{
    if (w < min)
        throw InputError("window too small: need --window >= " + std::to_string(min));
}

json dims_json(std::size_t even, std::size_t odd)
{
    return {{"even", even}, {"odd", odd}};
}

Outcome run_check_axioms(const Options& o)
{
    Outcome out;
    const AlgebraTable a = resolve_algebra(o);
    out.j["algebra"] = a.name();
    add_report(out, "report", check_axioms(a));
    return out;
}

Outcome run_derivations(const Options& o)
{
    Outcome out;
    const AlgebraTable a = resolve_algebra(o);
    require_finite(a, "derivations");
    DerivationAlgebra d = derivation_algebra(a);
    out.j["algebra"] = a.name();
    out.j["dims"] = dims_json(d.algebra.dim_even(), d.algebra.dim_odd());
    out.text << "Der(" << a.name() << ") has dims " << d.algebra.dim_even() << "|" << d.algebra.dim_odd() << "\n";
    add_report(out, "super_jacobi", check_superalgebra(d.algebra));
    if (auto iso = match_osp12(d.algebra)) {
        json m = json::object();
        for (const auto& [l, v] : *iso)
            m[l.str()] = vector_to_json(v);
        out.j["osp12"] = m;
        out.text << "isomorphic to osp(1|2)\n";
    }
    else {
        out.j["osp12"] = nullptr;
    }
    return out;
}

Outcome run_superize(const Options& o)
{
    Outcome out;
    const AlgebraTable a = resolve_algebra(o);
    require_finite(a, "superize");
    Superization s = superize(a);
    out.j["algebra"] = a.name();
    out.j["dims"] = dims_json(s.algebra.dim_even(), s.algebra.dim_odd());
    out.j["normalization"] = s.normalization.str();
    out.text << "superization of " << a.name() << " has dims " << s.algebra.dim_even() << "|" << s.algebra.dim_odd()
             << "\n";
    add_report(out, "super_jacobi", check_superalgebra(s.algebra));
    add_report(out, "well_defined", well_definedness(s));
    return out;
}

Outcome run_rep(const Options& o)
{
    Outcome out;
    const std::string mode = o.mode.empty() ? "frep" : o.mode;
    out.j["mode"] = mode;
    if (mode == "frep") {
        require_window(o.window, 1);
        FRepCalibration cal = calibrate_frep(2, 6);
        out.j["calibration"] = {{"passing", cal.passing.size()}, {"orbits", cal.orbits}};
        if (cal.chosen)
            out.j["calibration"]["chosen"] = {{"c_l", cal.chosen->c_l.str()},
                                              {"c_e", cal.chosen->c_e.str()},
                                              {"odd_sign", cal.chosen->odd_sign}};
        out.text << "FRep calibration: " << cal.passing.size() << " passing tuples, " << cal.orbits << " orbit(s)\n";
        out.ok = cal.chosen.has_value();
        add_report(out, "rep", check_rep(build_FRep(o.window, o.window + 3)));
    }
    else if (mode == "asl2") {
        require_window(o.window, 1);
        MatrixRep f = build_FRep(o.window, o.window + 3);
        MatrixRep r = pullback(f, build_asl2(), asl2_into_ak1(half(), conventions().frep_odd_sign));
        Asl2Operators s = asl2_operators(r);
        add_report(out, "rep", check_rep(r));
        add_report(out, "systemrep", check_asl2_rep(s));
        add_report(out, "ghost", check_ghost_casimir(s));
        MatrixRep e = extend_to_super(r);
        add_report(out, "extension", check_super_rep(e));
    }
    else if (mode == "contact") {
        require_window(o.window, 1);
        ContactCalibration cal = calibrate_contact(2, 6);
        out.j["passing"] = cal.passing.size();
        if (cal.chosen)
            out.j["chosen"] = {{"s", cal.chosen->s.str()}, {"dbar", cal.chosen->dbar}, {"c", cal.chosen->c.str()}};
        out.text << "contact calibration: " << cal.passing.size() << " passing\n";
        out.ok = cal.chosen.has_value();
        const auto& c = conventions();
        add_report(out, "calibrated",
                   check_contact_K1(o.window, o.window + 4, c.contact_s, c.contact_dbar, c.contact_odd_scale));
    }
    else if (mode == "bridge") {
        require_window(o.window, 1);
        MatrixRep f = build_FRep(2 * o.window + 2, 2 * o.window + 4);
        BridgeCalibration cal = calibrate_k1_bridge(f, o.window);
        out.j["alpha"] = cal.chosen ? json(cal.chosen->str()) : json(nullptr);
        out.ok = cal.chosen.has_value();
        if (cal.chosen)
            add_report(out, "bridge", check_super_rep(k1_bridge(f, o.window, *cal.chosen)));
        add_report(out, "well_defined", k1_bridge_well_definedness(f, o.window));
    }
    else if (mode == "fuzz") {
        json runs = json::array();
        for (auto [d0, d1] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 3}}) {
            FuzzResult f = fuzz_triviality(d0, d1, 2000, 1);
            runs.push_back({{"dims", std::to_string(d0) + "|" + std::to_string(d1)},
                            {"candidates", f.candidates},
                            {"exact", f.exact_solutions},
                            {"nonzero", f.nonzero_solutions},
                            {"certified", f.all_certified}});
            out.text << d0 << "|" << d1 << ": " << f.exact_solutions << " exact solutions, " << f.nonzero_solutions
                     << " nonzero\n";
            out.ok = out.ok && f.all_certified && f.nonzero_solutions == 0;
        }
        out.j["fuzz"] = runs;
    }
    else {
        throw InputError("unknown rep mode '" + mode + "' (frep, asl2, contact, bridge, fuzz)");
    }
    return out;
}

Outcome run_geo(const Options& o)
{
    Outcome out;
    const std::string mode = o.mode.empty() ? "verify-ak1" : o.mode;
    out.j["mode"] = mode;
    if (mode == "verify-ak1") {
        require_window(o.window, 1);
        add_report(out, "taylor", check_taylor(o.window));
    }
    else if (mode == "calibrate") {
        require_window(o.window, 1);
        GeoCalibration cal = calibrate_geometry(o.window);
        out.j["classes"] = cal.classes;
        out.j["taylor_classes"] = cal.taylor_classes;
        out.j["chosen_classes"] = cal.chosen_classes;
        out.j["chosen"] = cal.chosen ? json(cal.chosen->str()) : json(nullptr);
        out.text << cal.classes << " distinct conventions, " << cal.taylor_classes << " reproduce the table, "
                 << cal.chosen_classes << " after the skew tie-break"
                 << (cal.chosen ? ": " + cal.chosen->str() : std::string()) << "\n";
        out.ok = cal.chosen.has_value();
    }
    else if (mode == "invariants") {
        if (o.degree < 0)
            throw InputError("--degree must be >= 0");
        auto basis = invariant_bivector_space(o.degree);
        json bs = json::array();
        for (const auto& b : basis) {
            auto c = in_span_P_Lambda(b);
            bs.push_back({{"bivector", b.str()}, {"P", c ? json(c->first.str()) : json(nullptr)},
                          {"Lambda", c ? json(c->second.str()) : json(nullptr)}});
            out.text << b.str() << "\n";
        }
        out.j["dimension"] = basis.size();
        out.j["basis"] = bs;
        out.text << "dimension " << basis.size() << "\n";
    }
    else if (mode == "linear") {
        LinearAsl2 l = linear_asl2();
        json m = json::object();
        for (const auto& [lab, f] : l.images)
            m[lab.str()] = f.str();
        out.j["images"] = m;
        add_report(out, "linear", l.report);
    }
    else if (mode == "invariance") {
        for (const auto& [lab, h] : quadratic_hamiltonians()) {
            SuperVectorField x = hamiltonian_field(h);
            for (const Bivector& b : {poisson_bivector(), lambda_bivector()}) {
                Report r = lie_defect(x, b, 4);
                r.subject += " for X_" + lab.str();
                add_report(out, b.name + "/" + lab.str(), r);
            }
        }
    }
    else {
        throw InputError("unknown geo mode '" + mode + "' (verify-ak1, calibrate, invariants, linear, invariance)");
    }
    return out;
}

Outcome run_cohomology(const Options& o)
{
    Outcome out;
    const AntiModule m = resolve_module(o);
    require_finite(m.algebra, "cohomology");
    if (o.max_degree < 0)
        throw InputError("--max-degree must be >= 0");
    const Report mc = check_module(m);
    if (!mc.passed()) {
        out.j["module_check"] = mc.to_json();
        out.text << describe(mc);
        out.ok = false;
        return out;
    }
    if (o.max_degree > 0) {
        // H^k only makes sense where delta^k delta^(k-1) = 0
        const Report d2 = verify_d2(m, o.max_degree - 1);
        if (!d2.passed()) {
            out.j["d2"] = d2.to_json();
            out.text << describe(d2);
            out.ok = false;
            return out;
        }
    }
    json dims = json::object();
    for (int k = 1; k <= o.max_degree; ++k) {
        CohomologyDims d = cohomology_dims(m, k);
        dims[std::to_string(k)] = {{"even", d.even}, {"odd", d.odd}};
        out.text << "H^" << k << "(" << m.algebra.name() << "; " << m.name << ") = " << d.even << "|" << d.odd << "\n";
    }
    out.j = dims;
    return out;
}

Outcome run_cocycle(const Options& o)
{
    Outcome out;
    const std::string mode = o.mode.empty() ? "gamma" : o.mode;
    if (mode != "gamma")
        throw InputError("unknown cocycle '" + mode + "' (gamma)");
    require_window(o.window, 2);
    GammaResult g = verify_gamma(o.window);
    out.j["window"] = g.window;
    out.j["pairing_sign"] = g.pairing_sign;
    out.j["certificate"] = {{"coboundary_found", g.coboundary_found},
                            {"unknowns", g.unknowns},
                            {"equations", g.equations},
                            {"scope", "0-cochains supported on the window"}};
    add_report(out, "delta_gamma", g.cocycle);
    out.text << (g.coboundary_found ? "gamma is a coboundary on the window\n"
                                    : "no window-supported 0-cochain c solves delta c = gamma\n");
    out.ok = out.ok && !g.coboundary_found;
    return out;
}

Outcome run_associator(const Options& o)
{
    Outcome out;
    const AlgebraTable a = resolve_algebra(o);
    BilinearMap m = bracket_to_m(a);
    out.j["algebra"] = a.name();
    add_report(out, "skew_equivalence", skew_equivalence(m));
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with Lie antialgebras"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--algebra", o.algebra, "asl2, ah1:<kappa>, ak1:<window>, k1:<window>, osp12");
        sub->add_option("--spec", o.spec, "algebra spec file (JSON)");
        sub->add_option("--window", o.window, "window for family algebras");
        sub->add_flag("--json", o.json, "print a JSON report");
    };
    auto* check = app.add_subcommand("check-axioms", "check the antialgebra (or superalgebra) identities");
    auto* der = app.add_subcommand("derivations", "derivation superalgebra");
    auto* sup = app.add_subcommand("superize", "associated Lie superalgebra");
    auto* rep = app.add_subcommand("rep", "representations: frep, asl2, contact, bridge, fuzz");
    auto* geo = app.add_subcommand("geo", "geometry: verify-ak1, calibrate, invariants, linear, invariance");
    auto* coh = app.add_subcommand("cohomology", "cohomology dimensions");
    auto* coc = app.add_subcommand("cocycle", "the gamma cocycle on AK(1)");
    auto* ass = app.add_subcommand("associator", "Gerstenhaber-square equivalence");
    for (auto* s : {check, der, sup, rep, geo, coh, coc, ass})
        common(s);
    rep->add_option("mode", o.mode, "frep | asl2 | contact | bridge | fuzz");
    geo->add_option("mode", o.mode, "verify-ak1 | calibrate | invariants | linear | invariance");
    geo->add_option("--degree", o.degree, "coefficient degree bound for invariants");
    coh->add_option("--module", o.module, "trivial | adjoint | coadjoint | <module file>");
    coh->add_option("--max-degree", o.max_degree, "largest cochain degree");
    coc->add_option("mode", o.mode, "gamma");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Outcome out;
    try {
        if (*check)
            out = run_check_axioms(o);
        else if (*der)
            out = run_derivations(o);
        else if (*sup)
            out = run_superize(o);
        else if (*rep)
            out = run_rep(o);
        else if (*geo)
            out = run_geo(o);
        else if (*coh)
            out = run_cohomology(o);
        else if (*coc)
            out = run_cocycle(o);
        else
            out = run_associator(o);
    }
    catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (o.json)
        std::cout << out.j.dump(2) << "\n";
    else
        std::cout << out.text.str();
    return out.ok ? 0 : 1;
}
