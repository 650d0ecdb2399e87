#include "antialg/derivations.hpp"

#include "antialg/axioms.hpp"
#include "antialg/catalog.hpp"

#include <stdexcept>

namespace antialg {

GradedVector LinearOperator::operator()(const GradedVector& v) const
{
    GradedVector out;
    for (const auto& [l, c] : v.terms())
        out.add(on_basis(l), c);
    return out;
}

LinearOperator LinearOperator::from_matrix(const std::vector<Label>& basis, const RatMatrix& m, int parity)
{
    std::map<Label, GradedVector> images;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        GradedVector v;
        for (std::size_t i = 0; i < basis.size(); ++i)
            v.add(basis[i], m.at(i, j));
        images[basis[j]] = v;
    }
    return {parity, [images](const Label& l) {
                auto it = images.find(l);
                if (it == images.end())
                    throw std::out_of_range("operator undefined on " + l.str());
                return it->second;
            }};
}

RatMatrix LinearOperator::to_matrix(const std::vector<Label>& basis) const
{
    RatMatrix m(basis.size(), basis.size());
    std::map<Label, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i)
        pos[basis[i]] = i;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const GradedVector img = on_basis(basis[j]);
        for (const auto& [l, c] : img.terms()) {
            auto it = pos.find(l);
            if (it == pos.end())
                throw std::out_of_range("image " + l.str() + " leaves the basis");
            m.set(it->second, j, c);
        }
    }
    return m;
}

LinearOperator super_commutator(const LinearOperator& x, const LinearOperator& y)
{
    int s = sign_pow(x.parity * y.parity);
    return {parity_add(x.parity, y.parity),
            [x, y, s](const Label& l) { return x(y(l)) - Rational(s) * y(x(l)); }};
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b)
{
    return {a.parity, [a, b](const Label& l) { return a(l) + b(l); }};
}

LinearOperator operator*(const Rational& c, const LinearOperator& a)
{
    return {a.parity, [a, c](const Label& l) { return c * a(l); }};
}

Report derivation_defect(const LinearOperator& d, const AlgebraTable& a)
{
    Report r;
    r.subject = a.name();
    r.window = a.window() ? a.window()->str() : "full";
    r.checked = {identity::leibniz};
    auto basis = a.basis();
    for (const auto& x : basis)
        for (const auto& y : basis) {
            ++r.evaluations;
            Rational s = sign_pow(d.parity * a.parity(x));
            GradedVector def = d(a.product(x, y)) - a.product(d(GradedVector(x)), GradedVector(y)) -
                               s * a.product(GradedVector(x), d(GradedVector(y)));
            if (!def.is_zero())
                r.violations.push_back({identity::leibniz, {x.str(), y.str()}, def, ""});
        }
    return r;
}

LinearOperator DerivationAlgebra::op(const Label& d) const
{
    return LinearOperator::from_matrix(source_basis, operators.at(d), algebra.parity(d));
}

namespace {

// Solution space of the Leibniz system for operators of parity pd, as matrices.
std::vector<RatMatrix> solve_leibniz(const AlgebraTable& a, int pd)
{
    const auto basis = a.basis();
    const std::size_t n = basis.size();
    std::map<Label, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i)
        pos[basis[i]] = i;
    // unknown entries (i, j): D(b_j) has b_i-coefficient; allowed when p(b_i) = p(b_j) + pd
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (a.parity(basis[i]) == parity_add(a.parity(basis[j]), pd))
                unknowns.push_back({i, j});
    std::size_t rows = 0;
    RatMatrix sys(n * n * n, unknowns.size());
    for (std::size_t xi = 0; xi < n; ++xi)
        for (std::size_t yi = 0; yi < n; ++yi) {
            const Label &x = basis[xi], &y = basis[yi];
            Rational s = sign_pow(pd * a.parity(x));
            GradedVector xy = a.product(x, y);
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                auto [i, j] = unknowns[u];
                // D = elementary operator b_j -> b_i
                GradedVector def;
                def.add(basis[i], xy.coeff(basis[j]));
                if (j == xi)
                    def.add(a.product(basis[i], y), -1);
                if (j == yi)
                    def.add(a.product(x, basis[i]), -s);
                for (const auto& [l, c] : def.terms())
                    sys.add(rows + pos.at(l), u, c);
            }
            rows += n;
        }
    std::vector<RatMatrix> out;
    for (const auto& k : kernel_basis(sys)) {
        RatMatrix m(n, n);
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            if (!k[u].is_zero())
                m.set(unknowns[u].first, unknowns[u].second, k[u]);
        out.push_back(m);
    }
    return out;
}

RatVector flatten(const RatMatrix& m)
{
    RatVector v(m.rows() * m.cols());
    for (const auto& [rc, c] : m.entries())
        v[rc.first * m.cols() + rc.second] = c;
    return v;
}

}  // namespace

DerivationAlgebra derivation_algebra(const AlgebraTable& a)
{
    if (a.is_family())
        throw std::invalid_argument("derivation_algebra needs a finite algebra");
    DerivationAlgebra d;
    d.source_basis = a.basis();
    const std::size_t n = d.source_basis.size();
    std::vector<Label> even, odd;
    std::vector<RatMatrix> mats;
    for (int pd : {0, 1})
        for (const auto& m : solve_leibniz(a, pd)) {
            Label l("d" + std::to_string(pd), Rational(static_cast<long>(pd ? odd.size() : even.size())));
            (pd ? odd : even).push_back(l);
            d.operators[l] = m;
            mats.push_back(m);
        }
    std::vector<Label> all = even;
    all.insert(all.end(), odd.begin(), odd.end());
    // coordinates in the derivation basis: columns = flattened basis matrices
    std::vector<RatVector> cols;
    for (const auto& m : mats)
        cols.push_back(flatten(m));
    RatMatrix coords = RatMatrix::from_columns(cols, n * n);
    AlgebraTable::Table t;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            int pi = i < even.size() ? 0 : 1, pj = j < even.size() ? 0 : 1;
            RatMatrix br = mats[i] * mats[j] - Rational(sign_pow(pi * pj)) * (mats[j] * mats[i]);
            if (br.is_zero())
                continue;
            auto sol = solve(coords, flatten(br));
            if (!sol)
                throw std::logic_error("derivations not closed under the super-commutator at (" + all[i].str() +
                                       ", " + all[j].str() + ")");
            GradedVector v;
            for (std::size_t k = 0; k < all.size(); ++k)
                v.add(all[k], (*sol)[k]);
            t[{all[i], all[j]}] = v;
        }
    d.algebra = AlgebraTable::finite("Der(" + a.name() + ")", AlgebraKind::superalgebra, even, odd, t, false);
    return d;
}

std::optional<std::map<Label, GradedVector>> match_osp12(const AlgebraTable& g)
{
    if (g.kind() != AlgebraKind::superalgebra || g.dim_even() != 3 || g.dim_odd() != 2)
        return std::nullopt;
    const auto odd = g.odd_basis();
    const AlgebraTable osp = build_osp12();
    const Label xp("xi", half()), xm("xi", -half());
    const Label x1("x", 1), x0("x", 0), xm1("x", -1);
    auto br = [&](const GradedVector& u, const GradedVector& v) { return g.product(u, v); };
    std::vector<GradedVector> candidates{GradedVector(odd[0]), GradedVector(odd[1]),
                                         GradedVector(odd[0]) + GradedVector(odd[1]),
                                         GradedVector(odd[0]) - GradedVector(odd[1])};
    const auto basis = g.basis();
    for (const auto& u : candidates) {
        // [[u, o_k], u] columns; solve sum c_k [[u,o_k],u] = u
        RatMatrix m(basis.size(), odd.size());
        for (std::size_t k = 0; k < odd.size(); ++k) {
            auto w = br(br(u, GradedVector(odd[k])), u);
            for (std::size_t i = 0; i < basis.size(); ++i)
                m.set(i, k, w.coeff(basis[i]));
        }
        RatVector rhs(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
            rhs[i] = u.coeff(basis[i]);
        auto sol = solve(m, rhs);
        if (!sol)
            continue;
        GradedVector v;
        for (std::size_t k = 0; k < odd.size(); ++k)
            v.add(odd[k], (*sol)[k]);
        std::map<Label, GradedVector> phi{{xp, u},
                                          {xm, v},
                                          {x1, half() * br(u, u)},
                                          {x0, half() * br(u, v)},
                                          {xm1, half() * br(v, v)}};
        std::vector<RatVector> cols;
        for (const auto& l : osp.basis()) {
            RatVector c(basis.size());
            for (std::size_t i = 0; i < basis.size(); ++i)
                c[i] = phi[l].coeff(basis[i]);
            cols.push_back(c);
        }
        if (rank(RatMatrix::from_columns(cols)) != basis.size())
            continue;
        if (check_homomorphism(osp, g, phi).passed())
            return phi;
    }
    return std::nullopt;
}

LinearOperator k1_action(const Label& k, int s)
{
    const Rational idx = k.idx();
    if (k.family == "x")
        return {0, [idx](const Label& l) -> GradedVector {
                    if (l.family == "e")
                        return GradedVector(Label("e", idx + l.idx()), l.idx());
                    return GradedVector(Label("l", idx + l.idx()), l.idx() - idx * half());
                }};
    if (k.family == "xi")
        return {1, [idx, s](const Label& l) -> GradedVector {
                    if (l.family == "e")
                        return GradedVector(Label("l", idx + l.idx()));
                    return GradedVector(Label("e", idx + l.idx()), Rational(s) * (l.idx() - idx));
                }};
    throw std::invalid_argument("not a K(1) label: " + k.str());
}

LinearOperator k1_action(const GradedVector& k, int s)
{
    LinearOperator out{0, [](const Label&) { return GradedVector(); }};
    bool first = true;
    for (const auto& [l, c] : k.terms()) {
        auto op = c * k1_action(l, s);
        if (first) {
            out = op;
            first = false;
        }
        else {
            out = out + op;
        }
    }
    return out;
}

Report check_K1_action(long n)
{
    const Window w = Window::symmetric(Rational(n));
    const AlgebraTable ak1 = build_AK1(w);
    const AlgebraTable k1 = build_K1(w);
    Report r;
    r.subject = "K(1) on AK(1)";
    r.window = w.str();
    r.checked = {identity::leibniz, identity::k1_relation};
    const auto gens = k1.basis();
    for (const auto& g : gens) {
        Report d = derivation_defect(k1_action(g), ak1);
        for (auto& v : d.violations)
            v.witness.insert(v.witness.begin(), g.str());
        r.evaluations += d.evaluations;
        r.violations.insert(r.violations.end(), d.violations.begin(), d.violations.end());
    }
    const auto labels = ak1.basis();
    for (const auto& a : gens)
        for (const auto& b : gens) {
            auto lhs = super_commutator(k1_action(a), k1_action(b));
            auto rhs = k1_action(k1.product(a, b));
            for (const auto& l : labels) {
                ++r.evaluations;
                GradedVector d = lhs(l) - rhs(l);
                if (!d.is_zero())
                    r.violations.push_back({identity::k1_relation, {a.str(), b.str(), l.str()}, d, ""});
            }
        }
    return r;
}

}  // namespace antialg
