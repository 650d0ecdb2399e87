// Acceptance suite: one PASS/FAIL line per criterion.  Exit status 1 if any criterion fails.
// Time limits are wall-clock seconds for an optimized build.
#include "antialg/associator.hpp"
#include "antialg/axioms.hpp"
#include "antialg/catalog.hpp"
#include "antialg/cohomology.hpp"
#include "antialg/derivations.hpp"
#include "antialg/geometry.hpp"
#include "antialg/matrix.hpp"
#include "antialg/representations.hpp"
#include "antialg/superization.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace antialg;
using nlohmann::json;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    json j = json::object();

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            note << " [failed: " << what << "]";
        }
    }
    void report(const std::string& key, const Report& r)
    {
        j[key] = r.to_json();
        require(r.passed(), key);
    }
};

struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<void(Outcome&)> run;
};

// dim S^2(odd) / relations, computed straight from the product table
std::size_t quotient_dim_oracle(const AlgebraTable& a)
{
    const auto odd = a.odd_basis();
    const std::size_t n = odd.size();
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            gens.push_back({i, j});
    auto slot = [&](std::size_t i, std::size_t j) {
        if (i > j)
            std::swap(i, j);
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (gens[k] == std::make_pair(i, j))
                return k;
        return gens.size();
    };
    std::vector<RatVector> rows;
    for (const auto& al : a.even_basis())
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                RatVector row(gens.size());
                const GradedVector u = a.product(al, odd[i]), v = a.product(al, odd[j]);
                for (std::size_t k = 0; k < n; ++k) {
                    row[slot(k, j)] += u.coeff(odd[k]);
                    row[slot(i, k)] -= v.coeff(odd[k]);
                }
                rows.push_back(row);
            }
    if (rows.empty())
        return gens.size();
    RatMatrix m(rows.size(), gens.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < gens.size(); ++c)
            m.set(r, c, rows[r][c]);
    return gens.size() - rank(m);
}

bool shared_witness(const Report& r, const std::string& a, const std::string& b)
{
    for (const auto& v : r.violations)
        if (v.identity == a)
            for (const auto& w : r.violations)
                if (w.identity == b && w.witness == v.witness)
                    return true;
    return false;
}

void c1(Outcome& o)
{
    for (const auto& a : {build_asl2(), build_ah1(0), build_ah1(1), build_ah1(-2), build_AK1(6)})
        o.report(a.name(), check_antialgebra(a));
    o.note << "asl2, ah1(0), ah1(1), ah1(-2), AK1 |idx|<=6";
}

void c2(Outcome& o)
{
    const std::vector<std::string> ids{"SkewP", "AssCommT", "CacT", "ICommT", "Jack"};
    for (const auto& id : ids) {
        bool hit = false;
        for (const auto& m : catalog_mutations()) {
            if (m.target != id)
                continue;
            const Report r = check_antialgebra(m.algebra);
            const Violation* v = r.first(id);
            if (r.fails_only(id) && v && !v->witness.empty()) {
                hit = true;
                o.j[id] = {{"mutation", m.description}, {"witness", v->witness}, {"defect", v->defect.str()}};
            }
        }
        o.require(hit, "no mutation isolates " + id);
    }
    o.note << "each identity isolated by a catalog mutation";
}

void c3(Outcome& o)
{
    const GeoCalibration cal = calibrate_geometry(5);
    o.require(cal.chosen_classes == 1 && cal.chosen.has_value(), "calibration not unique");
    o.j["classes"] = cal.classes;
    o.j["taylor_classes"] = cal.taylor_classes;
    if (cal.chosen) {
        o.j["chosen"] = cal.chosen->str();
        o.require(*cal.chosen == calibrated_geo_convention(), "calibration disagrees with the default");
        o.report("taylor", check_taylor(5, *cal.chosen));
    }
    o.note << cal.taylor_classes << " classes reproduce the table, " << cal.chosen_classes << " after tie-break";
}

void c4(Outcome& o)
{
    for (const auto& [lab, h] : quadratic_hamiltonians()) {
        const SuperVectorField x = hamiltonian_field(h);
        o.report("P/" + lab.str(), lie_defect(x, poisson_bivector(), 4));
        o.report("Lambda/" + lab.str(), lie_defect(x, lambda_bivector(), 4));
    }
    const auto basis = invariant_bivector_space(1);
    o.require(basis.size() == 2, "invariant space dimension " + std::to_string(basis.size()));
    RatMatrix coords(2, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto c = in_span_P_Lambda(basis[k]);
        o.require(c.has_value(), basis[k].str() + " not in span{P, Lambda}");
        if (c) {
            coords.set(0, k, c->first);
            coords.set(1, k, c->second);
        }
        o.j["basis"].push_back(basis[k].str());
    }
    o.require(rank(coords) == 2, "basis does not span {P, Lambda}");
    o.note << "5 Hamiltonians, degree <= 4; invariant space dim " << basis.size();
}

void c5(Outcome& o)
{
    const DerivationAlgebra d = derivation_algebra(build_asl2());
    o.require(d.algebra.dim_even() == 3 && d.algebra.dim_odd() == 2, "Der(asl2) dims");
    o.report("super_jacobi", check_superalgebra(d.algebra));
    const auto iso = match_osp12(d.algebra);
    o.require(iso.has_value(), "no osp(1|2) base change");
    if (iso)
        o.report("osp12_base_change", check_homomorphism(build_osp12(), d.algebra, *iso));
    o.report("k1_action", check_K1_action(5));
    o.note << "Der(asl2) = " << d.algebra.dim_even() << "|" << d.algebra.dim_odd() << ", K(1) on AK1 |idx|<=5";
}

void c6(Outcome& o)
{
    const Superization s2 = superize(build_asl2());
    const Superization s1 = superize(build_ah1(1));
    o.require(s2.algebra.dim_even() == 3 && s2.algebra.dim_odd() == 2, "superize(asl2) dims");
    o.require(s1.algebra.dim_even() == 2 && s1.algebra.dim_odd() == 2, "superize(ah1(1)) dims");
    o.require(quotient_dim_oracle(build_ah1(1)) == s1.algebra.dim_even(), "rank oracle (ah1(1))");
    o.require(quotient_dim_oracle(build_asl2()) == s2.algebra.dim_even(), "rank oracle (asl2)");
    o.report("jacobi_asl2", check_superalgebra(s2.algebra));
    o.report("jacobi_ah1", check_superalgebra(s1.algebra));
    o.report("well_defined_asl2", well_definedness(s2));
    o.report("well_defined_ah1", well_definedness(s1));
    o.note << "3|2 and 2|2";
}

void c7(Outcome& o)
{
    const FRepCalibration cal = calibrate_frep(2, 6);
    o.require(cal.orbits == 1 && cal.chosen.has_value(), "FRep calibration not unique");
    o.j["passing"] = cal.passing.size();
    o.report("frep", check_rep(build_FRep(5, 8)));

    const MatrixRep f = build_FRep(3, 6);
    const MatrixRep r = pullback(f, build_asl2(), asl2_into_ak1(half(), conventions().frep_odd_sign));
    const Asl2Operators ops = asl2_operators(r);
    o.report("systemrep", check_asl2_rep(ops));
    o.report("ghost", check_ghost_casimir(ops));
    const MatrixRep e = extend_to_super(r);
    o.report("osp12_extension", check_super_rep(e));
    o.report("extension_well_defined", extension_well_definedness(r));

    const MatrixRep big = build_FRep(6, 9);
    const BridgeCalibration bc = calibrate_k1_bridge(big, 2);
    o.require(bc.chosen.has_value(), "K(1) bridge");
    if (bc.chosen)
        o.report("k1_extension", check_super_rep(k1_bridge(big, 2, *bc.chosen)));

    std::size_t exact = 0;
    for (auto [d0, d1] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        const FuzzResult fz = fuzz_triviality(d0, d1, 1000, 7);
        exact += fz.exact_solutions;
        o.require(fz.exact_solutions > 0 && fz.all_certified && fz.nonzero_solutions == 0,
                  "fuzz " + std::to_string(d0) + "|" + std::to_string(d1));
    }
    o.j["fuzz_exact"] = exact;
    o.note << "FRep orbit unique; " << exact << " fuzzed exact solutions certified trivial";
}

void c8(Outcome& o)
{
    for (const auto& a : {build_asl2(), build_ah1(0), build_ah1(1), build_ah1(-2), build_AK1(4)})
        o.report(a.name(), skew_equivalence(bracket_to_m(a)));
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"First", "AssCommT"}, {"Second", "CacT"}, {"Third", "ICommT"}, {"Fourth", "Jack"}};
    for (const auto& [mine, theirs] : pairs)
        for (const auto& m : catalog_mutations()) {
            if (m.target != theirs)
                continue;
            const Report r = skew_equivalence(bracket_to_m(m.algebra));
            const auto f = r.failing_identities();
            o.require(f == std::vector<std::string>{mine, theirs} || f == std::vector<std::string>{theirs, mine},
                      mine + " perturbation");
            o.require(shared_witness(r, mine, theirs), mine + " shared witness");
        }
    o.note << "equivalence on 5 algebras, 4 pairings";
}

void c9(Outcome& o)
{
    const AlgebraTable a = build_asl2();
    for (const auto& m : {trivial_module(a), adjoint_module(a), coadjoint_module(a)})
        o.report("d2_" + m.name, verify_d2(m, 3));
    o.report("bicomplex", bicomplex_check(a, 3));
    const AntiModule t = trivial_module(a);
    for (int k : {1, 2}) {
        const CohomologyDims h = cohomology_dims(t, k);
        o.j["H" + std::to_string(k)] = {{"even", h.even}, {"odd", h.odd}};
        o.require(h.even == 0 && h.odd == 0, "H^" + std::to_string(k) + " nonzero");
    }
    o.note << "degree <= 3, H^1 = H^2 = 0";
}

void c10(Outcome& o)
{
    const GammaResult g = verify_gamma(6);
    o.report("delta_gamma", g.cocycle);
    o.require(g.pairing_sign != 0, "no pairing sign closes");
    o.require(!g.coboundary_found, "gamma is a window coboundary");
    o.j["certificate"] = {{"unknowns", g.unknowns}, {"equations", g.equations}, {"coboundary_found", g.coboundary_found}};
    o.note << "no-solution certificate: " << g.unknowns << " unknowns, " << g.equations << " equations";
}

std::vector<Criterion> criteria()
{
    return {{1, "axioms", 2, c1},          {2, "mutations", 1, c2},       {3, "geometric origin", 5, c3},
            {4, "invariance", 10, c4},     {5, "derivations", 5, c5},     {6, "superization", 2, c6},
            {7, "representations", 10, c7}, {8, "associator", 3, c8},     {9, "cohomology", 15, c9},
            {10, "gamma cocycle", 5, c10}};
}

json run_suite(bool print, bool& all_ok, double& total)
{
    json suite = json::object();
    for (const auto& c : criteria()) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        }
        catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        total += secs;
        if (secs > c.limit)
            o.require(false, "over time limit");
        all_ok = all_ok && o.ok;
        suite[std::to_string(c.id)] = {{"title", c.title}, {"pass", o.ok}, {"details", o.j}};
        if (print) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "(%.2f s, limit %g s)", secs, c.limit);
            std::cout << "criterion " << (c.id < 10 ? " " : "") << c.id << "  " << (o.ok ? "PASS" : "FAIL") << "  "
                      << c.title << ": " << o.note.str() << " " << buf << std::endl;
        }
    }
    return suite;
}

}  // namespace

int main()
{
    bool ok = true;
    double total = 0;
    const std::string first = run_suite(true, ok, total).dump();
    bool ok2 = true;
    const std::string second = run_suite(false, ok2, total).dump();
    const bool same = first == second && ok == ok2;
    std::cout << "criterion 11  " << (same ? "PASS" : "FAIL") << "  determinism: two suite runs, " << first.size()
              << " bytes of JSON, " << (first == second ? "identical" : "different") << std::endl;
    ok = ok && same;
    std::cout << (ok ? "all criteria pass" : "some criteria FAIL") << " (total " << total << " s over both runs)"
              << std::endl;
    return ok ? 0 : 1;
}
