#include "antialg/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace antialg {

namespace {

bool is_half_integer(const Rational& r)
{
    return r.denominator() == 2;
}

// floor/ceil of a rational as long
long floor_of(const Rational& r)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return q.get_si();
}

long ceil_of(const Rational& r)
{
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return q.get_si();
}

std::vector<Rational> integers_in(const Window& w)
{
    std::vector<Rational> out;
    for (long n = ceil_of(w.min); n <= floor_of(w.max); ++n)
        out.emplace_back(n);
    return out;
}

std::vector<Rational> half_integers_in(const Window& w)
{
    std::vector<Rational> out;
    for (long k = ceil_of(w.min - half()); k <= floor_of(w.max - half()); ++k)
        out.push_back(Rational(k) + half());
    return out;
}

// Two-family algebra with integer-indexed even family and half-integer-indexed odd family.
AlgebraTable two_family(std::string name, AlgebraKind kind, std::string even_fam, std::string odd_fam,
                        AlgebraTable::ProductRule rule, const Window& w, std::string rule_name)
{
    auto parity = [even_fam, odd_fam](const Label& l) -> std::optional<int> {
        if (!l.index)
            return std::nullopt;
        if (l.family == even_fam && l.index->is_integer())
            return 0;
        if (l.family == odd_fam && is_half_integer(*l.index))
            return 1;
        return std::nullopt;
    };
    auto basis = [even_fam, odd_fam](int p, const Window& win) {
        std::vector<Label> out;
        if (p == 0)
            for (auto& n : integers_in(win))
                out.emplace_back(even_fam, n);
        else
            for (auto& i : half_integers_in(win))
                out.emplace_back(odd_fam, i);
        return out;
    };
    return AlgebraTable::family(std::move(name), kind, parity, basis, std::move(rule), w, std::move(rule_name));
}

AlgebraTable::Table make_table(std::initializer_list<std::tuple<Label, Label, GradedVector>> entries)
{
    AlgebraTable::Table t;
    for (const auto& [x, y, v] : entries)
        t[{x, y}] = v;
    return t;
}

std::string strip_suffix(const std::string& fam, char c)
{
    if (fam.empty() || fam.back() != c)
        throw std::invalid_argument("label family '" + fam + "' lacks suffix '" + std::string(1, c) + "'");
    return fam.substr(0, fam.size() - 1);
}

}  // namespace

AlgebraTable build_asl2()
{
    const Label eps("eps"), a("a"), b("b");
    return AlgebraTable::finite("asl2", AlgebraKind::antialgebra, {eps}, {a, b},
                                make_table({{eps, eps, GradedVector(eps)},
                                            {eps, a, GradedVector(a, half())},
                                            {eps, b, GradedVector(b, half())},
                                            {a, b, GradedVector(eps, half())}}));
}

AlgebraTable build_ah1(const Rational& kappa)
{
    const Label al("alpha"), a("a"), b("b");
    AlgebraTable::Table t = make_table({{a, b, GradedVector(al, half())}});
    if (!kappa.is_zero())
        t[{al, a}] = GradedVector(b, kappa);
    return AlgebraTable::finite("ah1:" + kappa.str(), AlgebraKind::antialgebra, {al}, {a, b}, t);
}

AlgebraTable build_AK1(const Window& w, int odd_sign)
{
    if (odd_sign != 1 && odd_sign != -1)
        throw std::invalid_argument("odd_sign must be +1 or -1");
    auto rule = [odd_sign](const Label& x, const Label& y) -> GradedVector {
        const Rational s = *x.index + *y.index;
        bool xe = x.family == "e", ye = y.family == "e";
        if (xe && ye)
            return GradedVector(Label("e", s));
        if (xe != ye)
            return GradedVector(Label("l", s), half());
        return GradedVector(Label("e", s), Rational(odd_sign) * half() * (*x.index - *y.index));
    };
    std::string name = odd_sign == 1 ? "ak1" : "ak1-flipped";
    return two_family(name, AlgebraKind::antialgebra, "e", "l", rule, w, "AK1");
}

AlgebraTable build_AK1(long n, int odd_sign)
{
    return build_AK1(Window::symmetric(Rational(n)), odd_sign);
}

AlgebraTable build_K1(const Window& w)
{
    auto rule = [](const Label& x, const Label& y) -> GradedVector {
        const Rational& i = *x.index;
        const Rational& j = *y.index;
        const Rational s = i + j;
        bool xe = x.family == "x", ye = y.family == "x";
        if (xe && ye)
            return GradedVector(Label("x", s), j - i);
        if (xe && !ye)
            return GradedVector(Label("xi", s), j - i * half());
        if (!xe && ye)  // [xi_i, x_j] = -[x_j, xi_i]
            return GradedVector(Label("xi", s), -(i - j * half()));
        return GradedVector(Label("x", s), Rational(2));
    };
    return two_family("k1", AlgebraKind::superalgebra, "x", "xi", rule, w, "K1");
}

AlgebraTable build_K1(long n)
{
    return build_K1(Window::symmetric(Rational(n)));
}

AlgebraTable build_osp12()
{
    AlgebraTable k1 = build_K1(1);
    std::vector<Label> even{Label("x", -1), Label("x", 0), Label("x", 1)};
    std::vector<Label> odd{Label("xi", Rational(-1, 2)), Label("xi", Rational(1, 2))};
    AlgebraTable::Table t;
    std::vector<Label> all = even;
    all.insert(all.end(), odd.begin(), odd.end());
    for (const auto& x : all)
        for (const auto& y : all) {
            auto v = k1.product(x, y);
            for (const auto& [l, c] : v.terms())
                if (std::find(all.begin(), all.end(), l) == all.end())
                    throw std::logic_error("osp(1|2) restriction is not closed");
            if (!v.is_zero())
                t[{x, y}] = v;
        }
    return AlgebraTable::finite("osp12", AlgebraKind::superalgebra, even, odd, t, false);
}

AlgebraTable build_abelian(std::size_t even, std::size_t odd)
{
    std::vector<Label> e, o;
    for (std::size_t i = 0; i < even; ++i)
        e.emplace_back("z0", Rational(static_cast<long>(i)));
    for (std::size_t i = 0; i < odd; ++i)
        o.emplace_back("z1", Rational(static_cast<long>(i)));
    return AlgebraTable::finite("abelian:" + std::to_string(even) + "|" + std::to_string(odd),
                                AlgebraKind::antialgebra, e, o, {});
}

std::vector<CatalogMutation> catalog_mutations()
{
    const Label eps("eps"), a("a"), b("b"), c("c"), al("alpha");
    std::vector<CatalogMutation> out;
    const AlgebraTable asl2 = build_asl2();
    out.push_back({"asl2 with ]a,eps[ = 3/2 a", "SkewP",
                   asl2.with_product(a, eps, GradedVector(a, Rational(3, 2))).renamed("asl2~skew")});
    const Label z0("z0", 0), z1("z0", 1);
    const AlgebraTable ab = build_abelian(2, 1);
    out.push_back({"abelian 2|1 with ]z0:0,z0:1[ = z0:0", "AssCommT",
                   ab.with_product(z0, z1, GradedVector(z0)).with_product(z1, z0, GradedVector(z0)).renamed("ab~ass")});
    const GradedVector ea = GradedVector(a, half()) + GradedVector(b);
    out.push_back({"asl2 with ]eps,a[ = a/2 + b", "CacT",
                   asl2.with_product(eps, a, ea).with_product(a, eps, ea).renamed("asl2~cact")});
    out.push_back({"ah1:0 with ]alpha,alpha[ = alpha", "ICommT",
                   build_ah1(0).with_product(al, al, GradedVector(al)).renamed("ah1~icomm")});
    out.push_back({"asl2 with an extra odd c, ]eps,c[ = c/2", "Jack",
                   AlgebraTable::finite("asl2+c", AlgebraKind::antialgebra, {eps}, {a, b, c},
                                        make_table({{eps, eps, GradedVector(eps)},
                                                    {eps, a, GradedVector(a, half())},
                                                    {eps, b, GradedVector(b, half())},
                                                    {eps, c, GradedVector(c, half())},
                                                    {a, b, GradedVector(eps, half())}}))});
    return out;
}

AlgebraTable build_builtin(const std::string& name)
{
    auto arg = [&](std::size_t prefix) { return name.substr(prefix); };
    try {
        if (name == "asl2")
            return build_asl2();
        if (name == "osp12")
            return build_osp12();
        if (name.rfind("ah1:", 0) == 0)
            return build_ah1(Rational::parse(arg(4)));
        if (name == "ah1")
            return build_ah1(0);
        if (name.rfind("ak1:", 0) == 0)
            return build_AK1(Window::symmetric(Rational::parse(arg(4))));
        if (name.rfind("k1:", 0) == 0)
            return build_K1(Window::symmetric(Rational::parse(arg(3))));
    }
    catch (const std::invalid_argument& e) {
        throw std::invalid_argument("bad algebra name '" + name + "': " + e.what());
    }
    throw std::invalid_argument("unknown algebra '" + name + "' (expected asl2, ah1:<kappa>, ak1:<window>, "
                                "k1:<window>, osp12)");
}

GradedVector apply_linear(const std::map<Label, GradedVector>& phi, const GradedVector& v)
{
    GradedVector out;
    for (const auto& [l, c] : v.terms()) {
        auto it = phi.find(l);
        if (it == phi.end())
            throw std::out_of_range("linear map undefined on " + l.str());
        out.add(it->second, c);
    }
    return out;
}

Report check_homomorphism(const AlgebraTable& src, const AlgebraTable& dst,
                          const std::map<Label, GradedVector>& phi)
{
    Report r;
    r.subject = src.name() + " -> " + dst.name();
    r.window = "full";
    r.checked = {"Hom"};
    auto basis = src.basis();
    for (const auto& x : basis)
        for (const auto& y : basis) {
            ++r.evaluations;
            GradedVector d = apply_linear(phi, src.product(x, y)) -
                             dst.product(apply_linear(phi, GradedVector(x)), apply_linear(phi, GradedVector(y)));
            if (!d.is_zero())
                r.violations.push_back({"Hom", {x.str(), y.str()}, d, ""});
        }
    return r;
}

std::map<Label, GradedVector> asl2_into_ak1(const Rational& i, int odd_sign)
{
    if (!is_half_integer(i))
        throw std::invalid_argument("asl2_into_ak1 needs a half-integer index");
    // ]l_i, l_{-i}[ = odd_sign * i * e_0, so c = 1 / (2 odd_sign i)
    Rational c = Rational(1) / (Rational(2 * odd_sign) * i);
    return {{Label("eps"), GradedVector(Label("e", 0))},
            {Label("a"), GradedVector(Label("l", i))},
            {Label("b"), GradedVector(Label("l", -i), c)}};
}

std::map<Label, GradedVector> ak1_index_reversal(const Window& w)
{
    std::map<Label, GradedVector> phi;
    // products of window elements land in the doubled window
    AlgebraTable a = build_AK1(Window{w.min + w.min, w.max + w.max});
    for (const auto& l : a.basis())
        phi[l] = GradedVector(Label(l.family, -*l.index));
    return phi;
}

// ---------------------------------------------------------------- modules

std::vector<Label> AntiModule::basis() const
{
    auto b = even_basis;
    b.insert(b.end(), odd_basis.begin(), odd_basis.end());
    return b;
}

int AntiModule::parity(const Label& b) const
{
    if (parity_rule) {
        auto p = parity_rule(b);
        if (!p)
            throw std::out_of_range("label " + b.str() + " is not in module " + name);
        return *p;
    }
    for (const auto& l : even_basis)
        if (l == b)
            return 0;
    for (const auto& l : odd_basis)
        if (l == b)
            return 1;
    throw std::out_of_range("label " + b.str() + " is not in module " + name);
}

bool AntiModule::contains(const Label& b) const
{
    try {
        parity(b);
        return true;
    }
    catch (const std::out_of_range&) {
        return false;
    }
}

GradedVector AntiModule::act(const Label& a, const GradedVector& v) const
{
    GradedVector out;
    for (const auto& [b, c] : v.terms())
        out.add(rho(a, b), c);
    return out;
}

GradedVector AntiModule::act(const GradedVector& a, const GradedVector& v) const
{
    GradedVector out;
    for (const auto& [l, c] : a.terms())
        out.add(act(l, v), c);
    return out;
}

Label dual_label(const Label& l)
{
    Label d = l;
    d.family += '*';
    return d;
}

Label adjoint_label(const Label& l)
{
    Label d = l;
    d.family += '\'';
    return d;
}

AntiModule trivial_module(const AlgebraTable& a, int parity, std::size_t dim)
{
    AntiModule m;
    m.name = "trivial";
    m.algebra = a;
    for (std::size_t i = 0; i < dim; ++i) {
        Label l = dim == 1 ? Label("t") : Label("t", Rational(static_cast<long>(i)));
        (parity ? m.odd_basis : m.even_basis).push_back(l);
    }
    m.rho = [](const Label&, const Label&) { return GradedVector(); };
    return m;
}

AntiModule adjoint_module(const AlgebraTable& a)
{
    AntiModule m;
    m.name = "adjoint";
    m.algebra = a;
    for (const auto& l : a.even_basis())
        m.even_basis.push_back(adjoint_label(l));
    for (const auto& l : a.odd_basis())
        m.odd_basis.push_back(adjoint_label(l));
    AlgebraTable alg = a;
    m.parity_rule = [alg](const Label& b) -> std::optional<int> {
        if (b.family.empty() || b.family.back() != '\'')
            return std::nullopt;
        Label u = b;
        u.family.pop_back();
        if (!alg.contains(u))
            return std::nullopt;
        return alg.parity(u);
    };
    m.rho = [alg](const Label& x, const Label& b) {
        Label u = b;
        u.family = strip_suffix(b.family, '\'');
        GradedVector out;
        const GradedVector v = alg.product(x, u);
        for (const auto& [l, c] : v.terms())
            out.add(adjoint_label(l), c);
        return out;
    };
    return m;
}

AntiModule coadjoint_module(const AlgebraTable& a, CoadjointConvention conv)
{
    AntiModule m;
    m.name = conv == CoadjointConvention::twisted ? "coadjoint"
             : conv == CoadjointConvention::untwisted ? "coadjoint-untwisted"
                                                        : "coadjoint-lie";
    m.algebra = a;
    for (const auto& l : a.even_basis())
        m.even_basis.push_back(dual_label(l));
    for (const auto& l : a.odd_basis())
        m.odd_basis.push_back(dual_label(l));
    AlgebraTable alg = a;
    m.parity_rule = [alg](const Label& b) -> std::optional<int> {
        if (b.family.empty() || b.family.back() != '*')
            return std::nullopt;
        Label u = b;
        u.family.pop_back();
        if (!alg.contains(u))
            return std::nullopt;
        return alg.parity(u);
    };
    // (rho_x f*)(z) = S * f*(]x, z[), i.e. rho_x f* = sum_z S coeff_f(]x,z[) z*
    std::vector<Label> finite_basis = a.is_family() ? std::vector<Label>{} : a.basis();
    m.rho = [alg, conv, finite_basis](const Label& x, const Label& fs) {
        Label f = fs;
        f.family = strip_suffix(fs.family, '*');
        const int px = alg.parity(x), pf = alg.parity(f);
        int s = 0;
        switch (conv) {
        case CoadjointConvention::twisted:
            s = sign_pow(px + px * pf);
            break;
        case CoadjointConvention::untwisted:
            s = sign_pow(px * pf);
            break;
        case CoadjointConvention::lie:
            s = -1;
            break;
        }
        std::vector<Label> zs;
        if (alg.is_family()) {
            // additive index families: z has index f - x and parity p(x) + p(f)
            Rational t = *f.index - *x.index;
            auto cand = alg.with_window({t, t});
            auto b = parity_add(px, pf) ? cand.odd_basis() : cand.even_basis();
            zs = b;
        }
        else {
            zs = finite_basis;
        }
        GradedVector out;
        for (const auto& z : zs) {
            Rational c = alg.product(x, z).coeff(f);
            if (!c.is_zero())
                out.add(dual_label(z), Rational(s) * c);
        }
        return out;
    };
    return m;
}

AntiModule table_module(std::string name, const AlgebraTable& a, std::vector<Label> even, std::vector<Label> odd,
                        std::map<std::pair<Label, Label>, GradedVector> rho)
{
    AntiModule m;
    m.name = std::move(name);
    m.algebra = a;
    m.even_basis = std::move(even);
    m.odd_basis = std::move(odd);
    for (const auto& [key, v] : rho) {
        a.parity(key.first);
        m.parity(key.second);
        for (const auto& [l, c] : v.terms())
            m.parity(l);
    }
    auto shared = std::make_shared<const std::map<std::pair<Label, Label>, GradedVector>>(std::move(rho));
    m.rho = [shared](const Label& x, const Label& b) {
        auto it = shared->find({x, b});
        return it == shared->end() ? GradedVector() : it->second;
    };
    return m;
}

AlgebraTable semidirect(const AlgebraTable& a, const AntiModule& m)
{
    const std::string name = a.name() + " x| " + m.name;
    auto rule = [a, m](const Label& x, const Label& y) -> GradedVector {
        bool xa = a.contains(x), ya = a.contains(y);
        if (xa && ya)
            return a.product(x, y);
        if (xa && !ya)
            return m.rho(x, y);
        if (!xa && ya)
            return Rational(sign_pow(a.parity(y) * m.parity(x))) * m.rho(y, x);
        return GradedVector();
    };
    for (const auto& x : a.basis())
        for (const auto& b : m.basis()) {
            auto v = m.rho(x, b);
            for (const auto& [l, c] : v.terms())
                if (m.parity(l) != parity_add(a.parity(x), m.parity(b)))
                    throw std::invalid_argument("module action does not preserve parity at (" + x.str() + ", " +
                                                b.str() + ")");
        }
    if (!a.is_family()) {
        AlgebraTable::Table t;
        auto ev = a.even_basis(), od = a.odd_basis();
        ev.insert(ev.end(), m.even_basis.begin(), m.even_basis.end());
        od.insert(od.end(), m.odd_basis.begin(), m.odd_basis.end());
        std::vector<Label> all = ev;
        all.insert(all.end(), od.begin(), od.end());
        for (const auto& x : all)
            for (const auto& y : all) {
                auto v = rule(x, y);
                if (!v.is_zero())
                    t[{x, y}] = v;
            }
        return AlgebraTable::finite(name, AlgebraKind::antialgebra, ev, od, t, false);
    }
    auto parity = [a, m](const Label& l) -> std::optional<int> {
        if (a.contains(l))
            return a.parity(l);
        if (m.contains(l))
            return m.parity(l);
        return std::nullopt;
    };
    auto basis = [a, m](int p, const Window& w) {
        auto b = p ? a.with_window(w).odd_basis() : a.with_window(w).even_basis();
        const auto& mb = p ? m.odd_basis : m.even_basis;
        for (const auto& l : mb)
            if (!l.index || w.contains(*l.index))
                b.push_back(l);
        return b;
    };
    return AlgebraTable::family(name, AlgebraKind::antialgebra, parity, basis, rule, *a.window(), a.rule_name());
}

}  // namespace antialg
