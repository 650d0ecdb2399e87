#include "antialg/geometry.hpp"

#include "antialg/catalog.hpp"
#include "antialg/matrix.hpp"

#include <stdexcept>

namespace antialg {

// ---------------------------------------------------------------- SuperFunction

SuperFunction SuperFunction::monomial(long a, long b, int e, const Rational& c)
{
    SuperFunction f;
    f.add(a, b, e, c);
    return f;
}

Rational SuperFunction::coeff(long a, long b, int e) const
{
    auto it = terms_.find({a, b, e});
    return it == terms_.end() ? Rational(0) : it->second;
}

SuperFunction& SuperFunction::add(long a, long b, int e, const Rational& c)
{
    if (e != 0 && e != 1)
        throw std::invalid_argument("tau exponent must be 0 or 1");
    if (c.is_zero())
        return *this;
    auto& slot = terms_[{a, b, e}];
    slot += c;
    if (slot.is_zero())
        terms_.erase({a, b, e});
    return *this;
}

SuperFunction& SuperFunction::add(const SuperFunction& f, const Rational& c)
{
    for (const auto& [m, v] : f.terms_)
        add(m.a, m.b, m.e, c * v);
    return *this;
}

ParityClass SuperFunction::parity() const
{
    bool ev = false, od = false;
    for (const auto& [m, c] : terms_)
        (m.e ? od : ev) = true;
    if (ev && od)
        return ParityClass::mixed;
    return od ? ParityClass::odd : ParityClass::even;
}

int SuperFunction::parity_bit() const
{
    auto p = parity();
    if (p == ParityClass::mixed)
        throw std::invalid_argument("function of mixed parity: " + str());
    return p == ParityClass::odd;
}

SuperFunction SuperFunction::dp() const
{
    SuperFunction r;
    for (const auto& [m, c] : terms_)
        r.add(m.a - 1, m.b, m.e, c * Rational(m.a));
    return r;
}

SuperFunction SuperFunction::dq() const
{
    SuperFunction r;
    for (const auto& [m, c] : terms_)
        r.add(m.a, m.b - 1, m.e, c * Rational(m.b));
    return r;
}

SuperFunction SuperFunction::dtau() const
{
    SuperFunction r;
    for (const auto& [m, c] : terms_)
        if (m.e)
            r.add(m.a, m.b, 0, c);
    return r;
}

SuperFunction operator*(const Rational& c, const SuperFunction& f)
{
    SuperFunction r;
    return r.add(f, c);
}

SuperFunction operator*(const SuperFunction& f, const SuperFunction& g)
{
    SuperFunction r;
    for (const auto& [m, c] : f.terms_)
        for (const auto& [n, d] : g.terms_)
            if (!(m.e && n.e))
                r.add(m.a + n.a, m.b + n.b, m.e + n.e, c * d);
    return r;
}

std::string SuperFunction::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        std::string t;
        auto factor = [&](const char* v, long k) {
            if (k == 0)
                return;
            if (!t.empty())
                t += " ";
            t += v;
            if (k != 1)
                t += "^" + std::to_string(k);
        };
        factor("p", m.a);
        factor("q", m.b);
        if (m.e)
            t += t.empty() ? "τ" : " τ";
        Rational a = c;
        bool neg = a.sign() < 0;
        if (neg)
            a = -a;
        std::string cs = a == Rational(1) && !t.empty() ? "" : a.str();
        if (!cs.empty() && !t.empty())
            cs += " ";
        if (s.empty())
            s = (neg ? "-" : "") + cs + t;
        else
            s += (neg ? " - " : " + ") + cs + t;
    }
    return s;
}

std::optional<Rational> euler_degree(const SuperFunction& f)
{
    std::optional<long> d;
    for (const auto& [m, c] : f.terms()) {
        long k = m.a + m.b + m.e;
        if (d && *d != k)
            return std::nullopt;
        d = k;
    }
    if (!d)
        return std::nullopt;
    return Rational(*d);
}

int dir_parity(Dir d)
{
    return d == Dir::tau ? 1 : 0;
}

const char* dir_name(Dir d)
{
    switch (d) {
    case Dir::p:
        return "d_p";
    case Dir::q:
        return "d_q";
    default:
        return "d_tau";
    }
}

SuperFunction derivative(Dir d, const SuperFunction& f)
{
    switch (d) {
    case Dir::p:
        return f.dp();
    case Dir::q:
        return f.dq();
    default:
        return f.dtau();
    }
}

SuperFunction SuperVectorField::operator()(const SuperFunction& f) const
{
    return fp * f.dp() + fq * f.dq() + ftau * f.dtau();
}

// ---------------------------------------------------------------- bivectors

int Bivector::parity() const
{
    std::optional<int> p;
    for (const auto& t : terms) {
        if (t.coef.is_zero())
            continue;
        int q = parity_add(t.coef.parity_bit(), dir_parity(t.x) + dir_parity(t.y));
        if (p && *p != q)
            throw std::invalid_argument("bivector of mixed parity");
        p = q;
    }
    return p.value_or(0);
}

std::string Bivector::str() const
{
    std::string s;
    for (const auto& t : terms) {
        if (t.coef.is_zero())
            continue;
        if (!s.empty())
            s += " + ";
        s += "(" + t.coef.str() + ") " + dir_name(t.x) + "^" + dir_name(t.y);
    }
    return s.empty() ? "0" : s;
}

Bivector poisson_bivector()
{
    return {"P", {{SuperFunction::constant(1), Dir::p, Dir::q}, {SuperFunction::constant(half()), Dir::tau, Dir::tau}}};
}

Bivector lambda_bivector()
{
    return {"Lambda",
            {{SuperFunction::p(), Dir::tau, Dir::p},
             {SuperFunction::q(), Dir::tau, Dir::q},
             {SuperFunction::tau(), Dir::tau, Dir::tau},
             {SuperFunction::tau(), Dir::p, Dir::q}}};
}

std::string GeoConvention::str() const
{
    return "sign=" + std::to_string(sign) + " koszul=" + std::to_string(koszul) +
           " tau_sym=" + std::to_string(tau_symmetric) + " coeff_sign=" + std::to_string(coeff_sign);
}

GeoConvention calibrated_geo_convention(const Conventions& c)
{
    return {c.geo_sign, c.geo_koszul, c.geo_tau_symmetric, c.geo_coeff_sign};
}

std::vector<GeoConvention> all_geo_conventions()
{
    std::vector<GeoConvention> out;
    for (int g : {1, -1})
        for (int s = 0; s < 4; ++s)
            for (bool sym : {false, true})
                for (bool cp : {false, true})
                    out.push_back({g, s, sym, cp});
    return out;
}

namespace {

std::pair<SuperFunction, SuperFunction> split(const SuperFunction& f)
{
    SuperFunction ev, od;
    for (const auto& [m, c] : f.terms())
        (m.e ? od : ev).add(m.a, m.b, m.e, c);
    return {ev, od};
}

SuperFunction contract_term(const BivectorTerm& t, const SuperFunction& f, int pf, const SuperFunction& g, int pg,
                            const GeoConvention& conv)
{
    const int px = dir_parity(t.x), py = dir_parity(t.y);
    SuperFunction xf = derivative(t.x, f), yg = derivative(t.y, g);
    SuperFunction out;
    if (t.x == Dir::tau && t.y == Dir::tau && conv.tau_symmetric) {
        out = Rational(2) * (xf * yg);
    }
    else {
        const int e[] = {0, pf * pg, px * py, px * py + pf * pg};
        out = xf * yg - Rational(sign_pow(e[conv.koszul])) * (derivative(t.x, g) * derivative(t.y, f));
    }
    SuperFunction res;
    auto [ce, co] = split(t.coef);
    res.add(ce * out, conv.sign);
    res.add(co * out, conv.sign * sign_pow(conv.coeff_sign * pf));
    return res;
}

}  // namespace

SuperFunction contract(const Bivector& b, const SuperFunction& f, const SuperFunction& g, const GeoConvention& conv)
{
    auto [fe, fo] = split(f);
    auto [ge, go] = split(g);
    SuperFunction out;
    for (const auto& t : b.terms)
        for (int pf : {0, 1})
            for (int pg : {0, 1}) {
                const SuperFunction& ff = pf ? fo : fe;
                const SuperFunction& gg = pg ? go : ge;
                if (!ff.is_zero() && !gg.is_zero())
                    out.add(contract_term(t, ff, pf, gg, pg, conv));
            }
    return out;
}

SuperFunction anti_bracket(const SuperFunction& f, const SuperFunction& g, const GeoConvention& conv)
{
    static const Bivector lam = lambda_bivector();
    auto [fe, fo] = split(f);
    return half() * contract(lam, fe, g, conv) - half() * contract(lam, fo, g, conv);
}

SuperFunction poisson_bracket(const SuperFunction& f, const SuperFunction& g, const GeoConvention& conv)
{
    static const Bivector pb = poisson_bivector();
    return contract(pb, f, g, conv);
}

SuperVectorField hamiltonian_field(const SuperFunction& h, const GeoConvention& conv)
{
    return {poisson_bracket(h, SuperFunction::p(), conv), poisson_bracket(h, SuperFunction::q(), conv),
            poisson_bracket(h, SuperFunction::tau(), conv), h.parity_bit()};
}

// ---------------------------------------------------------------- Taylor basis

SuperFunction taylor_function(const Label& l)
{
    if (l.family == "l") {
        Rational i = l.idx();
        return SuperFunction::monomial((half() - i).to_long(), (i + half()).to_long(), 0);
    }
    if (l.family == "e") {
        long n = l.idx().to_long();
        return SuperFunction::monomial(-n, n, 1);
    }
    throw std::invalid_argument("not an AK(1) label: " + l.str());
}

std::optional<Label> taylor_label(const SuperFunction& f)
{
    if (f.terms().size() != 1 || f.terms().begin()->second != Rational(1))
        return std::nullopt;
    const auto& m = f.terms().begin()->first;
    if (m.e == 0 && m.a + m.b == 1)
        return Label("l", Rational(m.b) - half());
    if (m.e == 1 && m.a == -m.b)
        return Label("e", Rational(m.b));
    return std::nullopt;
}

namespace {

SuperFunction taylor_of(const GradedVector& v)
{
    SuperFunction f;
    for (const auto& [l, c] : v.terms())
        f.add(taylor_function(l), c);
    return f;
}

std::optional<GradedVector> taylor_preimage(const SuperFunction& f)
{
    GradedVector v;
    for (const auto& [m, c] : f.terms()) {
        if (m.a + m.b + m.e != 1)
            return std::nullopt;
        if (m.e)
            v.add(Label("e", Rational(m.b)), c);
        else
            v.add(Label("l", Rational(m.b) - half()), c);
    }
    return v;
}

void record_function(Report& r, const char* id, std::vector<std::string> witness, const SuperFunction& d)
{
    ++r.evaluations;
    if (d.is_zero())
        return;
    Violation v;
    v.identity = id;
    v.witness = std::move(witness);
    if (auto g = taylor_preimage(d))
        v.defect = *g;
    v.detail = d.str();
    r.violations.push_back(std::move(v));
}

std::vector<SuperFunction> probes()
{
    std::vector<SuperFunction> out;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (int e : {0, 1})
                out.push_back(SuperFunction::monomial(a, b, e));
    return out;
}

}  // namespace

Report check_taylor(long window, const GeoConvention& conv)
{
    const AlgebraTable ak = build_AK1(window);
    Report r;
    r.subject = "Taylor basis";
    r.window = ak.window()->str();
    r.checked = {identity::taylor};
    const auto basis = ak.basis();
    for (const auto& x : basis)
        for (const auto& y : basis) {
            SuperFunction lhs = anti_bracket(taylor_function(x), taylor_function(y), conv);
            record_function(r, identity::taylor, {x.str(), y.str()}, lhs - taylor_of(ak.product(x, y)));
        }
    return r;
}

GeoCalibration calibrate_geometry(long window)
{
    GeoCalibration cal;
    const auto pr = probes();
    std::vector<std::vector<SuperFunction>> sigs;
    std::vector<bool> class_skew;
    for (const auto& conv : all_geo_conventions()) {
        std::vector<SuperFunction> sig;
        sig.reserve(pr.size() * pr.size());
        for (const auto& f : pr)
            for (const auto& g : pr)
                sig.push_back(anti_bracket(f, g, conv));
        std::size_t cls = 0;
        while (cls < sigs.size() && sigs[cls] != sig)
            ++cls;
        if (cls == sigs.size()) {
            // SkewP in algebra parity (opposite to function parity)
            bool skew = true;
            for (std::size_t i = 0; i < pr.size() && skew; ++i)
                for (std::size_t j = 0; j < pr.size() && skew; ++j) {
                    int pi = 1 - pr[i].parity_bit(), pj = 1 - pr[j].parity_bit();
                    skew = sig[i * pr.size() + j] == Rational(sign_pow(pi * pj)) * sig[j * pr.size() + i];
                }
            sigs.push_back(std::move(sig));
            class_skew.push_back(skew);
        }
        cal.trials.push_back({conv, check_taylor(window, conv).passed(), class_skew[cls], cls});
    }
    cal.classes = sigs.size();
    std::vector<bool> tay(sigs.size(), false), chosen(sigs.size(), false);
    for (const auto& t : cal.trials)
        if (t.taylor) {
            tay[t.cls] = true;
            chosen[t.cls] = t.skew;
        }
    for (std::size_t c = 0; c < sigs.size(); ++c) {
        cal.taylor_classes += tay[c];
        cal.chosen_classes += chosen[c];
    }
    if (cal.chosen_classes == 1)
        for (const auto& t : cal.trials)
            if (t.taylor && t.skew) {
                cal.chosen = t.conv;
                break;
            }
    return cal;
}

LinearAsl2 linear_asl2(const GeoConvention& conv)
{
    LinearAsl2 out;
    Report& r = out.report;
    r.subject = "linear functions";
    r.window = "full";
    r.checked = {identity::linear_asl2};
    const SuperFunction t = SuperFunction::tau(), p = SuperFunction::p(), q = SuperFunction::q();
    Rational k1 = anti_bracket(t, t, conv).coeff(0, 0, 1);
    Rational k3 = anti_bracket(p, q, conv).coeff(0, 0, 1);
    if (k1.is_zero() || k3.is_zero()) {
        r.violations.push_back({identity::linear_asl2, {}, {}, "no identification: ]τ,τ[ or ]p,q[ has no τ part"});
        return out;
    }
    Rational u = Rational(1) / k1;
    out.images = {{Label("eps"), u * t}, {Label("a"), p}, {Label("b"), (u / (Rational(2) * k3)) * q}};
    const AlgebraTable a = build_asl2();
    auto img = [&](const GradedVector& v) {
        SuperFunction f;
        for (const auto& [l, c] : v.terms())
            f.add(out.images.at(l), c);
        return f;
    };
    for (const auto& x : a.basis())
        for (const auto& y : a.basis()) {
            SuperFunction d = anti_bracket(out.images.at(x), out.images.at(y), conv) - img(a.product(x, y));
            ++r.evaluations;
            if (!d.is_zero())
                r.violations.push_back({identity::linear_asl2, {x.str(), y.str()}, {}, d.str()});
        }
    return out;
}

std::vector<std::pair<Label, SuperFunction>> quadratic_hamiltonians()
{
    return {{Label("pp"), SuperFunction::monomial(2, 0, 0)},
            {Label("qq"), SuperFunction::monomial(0, 2, 0)},
            {Label("pq"), SuperFunction::monomial(1, 1, 0)},
            {Label("pt"), SuperFunction::monomial(1, 0, 1)},
            {Label("qt"), SuperFunction::monomial(0, 1, 1)}};
}

AlgebraTable poisson_quadratics(const GeoConvention& conv)
{
    const auto hs = quadratic_hamiltonians();
    std::vector<Label> even, odd;
    for (const auto& [l, h] : hs)
        (h.parity_bit() ? odd : even).push_back(l);
    auto preimage = [&](const SuperFunction& f) {
        GradedVector v;
        for (const auto& [m, c] : f.terms()) {
            bool found = false;
            for (const auto& [l, h] : hs)
                if (h.terms().begin()->first == m) {
                    v.add(l, c);
                    found = true;
                }
            if (!found)
                throw std::logic_error("quadratic Hamiltonians not closed: " + f.str());
        }
        return v;
    };
    AlgebraTable::Table t;
    for (const auto& [x, hx] : hs)
        for (const auto& [y, hy] : hs) {
            GradedVector v = preimage(poisson_bracket(hx, hy, conv));
            if (!v.is_zero())
                t[{x, y}] = v;
        }
    return AlgebraTable::finite("quadratics", AlgebraKind::superalgebra, even, odd, t, false);
}

std::vector<SuperFunction> polynomial_monomials(long degree)
{
    std::vector<SuperFunction> out;
    for (long a = 0; a <= degree; ++a)
        for (long b = 0; a + b <= degree; ++b)
            for (int e : {0, 1})
                if (a + b + e <= degree)
                    out.push_back(SuperFunction::monomial(a, b, e));
    return out;
}

Report lie_defect(const SuperVectorField& x, const Bivector& b, long max_degree, const GeoConvention& conv)
{
    Report r;
    r.subject = "L_X " + b.name;
    r.window = "degree <= " + std::to_string(max_degree);
    r.checked = {identity::lie_invariance};
    const int px = x.parity, pb = b.parity();
    const auto mons = polynomial_monomials(max_degree);
    for (const auto& f : mons)
        for (const auto& g : mons) {
            const int pf = f.parity_bit();
            SuperFunction d = x(contract(b, f, g, conv));
            SuperFunction inner = contract(b, x(f), g, conv);
            inner.add(contract(b, f, x(g), conv), sign_pow(px * pf));
            d.add(inner, -sign_pow(px * pb));
            record_function(r, identity::lie_invariance, {f.str(), g.str()}, d);
        }
    return r;
}

namespace {

using BiKey = std::tuple<int, int, long, long, int>;

std::map<BiKey, Rational> coordinates(const Bivector& b)
{
    std::map<BiKey, Rational> out;
    for (const auto& t : b.terms)
        for (const auto& [m, c] : t.coef.terms()) {
            auto& slot = out[{static_cast<int>(t.x), static_cast<int>(t.y), m.a, m.b, m.e}];
            slot += c;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

std::vector<Bivector> invariant_bivector_space(long bound, const InvariantOptions& opt, const GeoConvention& conv)
{
    const long test_degree = opt.test_degree >= 0 ? opt.test_degree : bound + 2;
    std::vector<BivectorTerm> unknowns;
    for (const auto& [x, y] : opt.pairs)
        for (const auto& c : polynomial_monomials(bound)) {
            int p = parity_add(c.parity_bit(), dir_parity(x) + dir_parity(y));
            if ((opt.parity == InvariantOptions::Parity::even && p) ||
                (opt.parity == InvariantOptions::Parity::odd && !p))
                continue;
            unknowns.push_back({c, x, y});
        }
    std::vector<SuperVectorField> fields;
    for (const auto& [l, h] : quadratic_hamiltonians())
        if (!opt.even_fields_only || h.parity_bit() == 0)
            fields.push_back(hamiltonian_field(h, conv));
    const auto tests = polynomial_monomials(test_degree);
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, long, long, int>, std::size_t> row_of;
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
        Bivector b{"", {unknowns[j]}};
        const int pb = b.parity();
        for (std::size_t h = 0; h < fields.size(); ++h) {
            const auto& x = fields[h];
            for (std::size_t fi = 0; fi < tests.size(); ++fi)
                for (std::size_t gi = 0; gi < tests.size(); ++gi) {
                    const auto &f = tests[fi], &g = tests[gi];
                    SuperFunction d = x(contract(b, f, g, conv));
                    SuperFunction inner = contract(b, x(f), g, conv);
                    inner.add(contract(b, f, x(g), conv), sign_pow(x.parity * f.parity_bit()));
                    d.add(inner, -sign_pow(x.parity * pb));
                    for (const auto& [m, c] : d.terms()) {
                        auto key = std::make_tuple(h, fi, gi, m.a, m.b, m.e);
                        auto it = row_of.try_emplace(key, row_of.size()).first;
                        entries.push_back({it->second, j, c});
                    }
                }
        }
    }
    RatMatrix sys(row_of.size(), unknowns.size());
    for (const auto& [i, j, c] : entries)
        sys.add(i, j, c);
    std::vector<Bivector> out;
    for (const auto& k : kernel_basis(sys)) {
        Bivector b{"invariant", {}};
        for (std::size_t j = 0; j < unknowns.size(); ++j)
            if (!k[j].is_zero())
                b.terms.push_back({k[j] * unknowns[j].coef, unknowns[j].x, unknowns[j].y});
        out.push_back(b);
    }
    return out;
}

std::optional<std::pair<Rational, Rational>> in_span_P_Lambda(const Bivector& b)
{
    auto cb = coordinates(b), cp = coordinates(poisson_bivector()), cl = coordinates(lambda_bivector());
    std::map<BiKey, std::size_t> row;
    for (const auto* m : {&cb, &cp, &cl})
        for (const auto& [k, c] : *m)
            row.try_emplace(k, row.size());
    RatMatrix a(row.size(), 2);
    RatVector rhs(row.size());
    for (const auto& [k, c] : cp)
        a.set(row[k], 0, c);
    for (const auto& [k, c] : cl)
        a.set(row[k], 1, c);
    for (const auto& [k, c] : cb)
        rhs[row[k]] = c;
    auto sol = solve(a, rhs);
    if (!sol)
        return std::nullopt;
    return std::make_pair((*sol)[0], (*sol)[1]);
}

}  // namespace antialg
