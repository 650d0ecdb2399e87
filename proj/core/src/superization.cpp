#include "antialg/superization.hpp"

#include "antialg/axioms.hpp"
#include "antialg/catalog.hpp"
#include "antialg/conventions.hpp"
#include "antialg/derivations.hpp"

#include <stdexcept>

namespace antialg {

Label sym_label(const Label& a, const Label& b)
{
    return Label("s:(" + a.str() + "," + b.str() + ")");
}

std::size_t SymSquareSpace::index(const Label& a, const Label& b) const
{
    std::size_t ia = 0, ib = 0;
    bool fa = false, fb = false;
    for (std::size_t k = 0; k < odd.size(); ++k) {
        if (odd[k] == a) {
            ia = k;
            fa = true;
        }
        if (odd[k] == b) {
            ib = k;
            fb = true;
        }
    }
    if (!fa || !fb)
        throw std::out_of_range("not an odd label: " + (fa ? b : a).str());
    if (ia > ib)
        std::swap(ia, ib);
    // generators enumerate (i, j), i <= j, row by row
    std::size_t n = odd.size();
    return ia * n - ia * (ia - 1) / 2 + (ib - ia);
}

RatVector SymSquareSpace::sym(const GradedVector& a, const GradedVector& b) const
{
    RatVector v(generators.size());
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms())
            v[index(x, y)] += cx * cy;
    return v;
}

SymSquareSpace sym_square(const AlgebraTable& a)
{
    if (a.is_family())
        throw std::invalid_argument("superization needs a finite algebra");
    SymSquareSpace s;
    s.odd = a.odd_basis();
    for (std::size_t i = 0; i < s.odd.size(); ++i)
        for (std::size_t j = i; j < s.odd.size(); ++j)
            s.generators.push_back({s.odd[i], s.odd[j]});
    for (const auto& al : a.even_basis())
        for (const auto& x : s.odd)
            for (const auto& y : s.odd) {
                RatVector r = s.sym(a.product(al, x), GradedVector(y));
                RatVector r2 = s.sym(GradedVector(x), a.product(al, y));
                for (std::size_t k = 0; k < r.size(); ++k)
                    r[k] -= r2[k];
                if (!is_zero_vector(r))
                    s.relations.push_back(r);
            }
    s.quotient = quotient(s.generators.size(), s.relations);
    return s;
}

GradedVector Superization::project(const RatVector& v) const
{
    RatVector q = square.quotient.project(v);
    GradedVector out;
    for (std::size_t i = 0; i < q.size(); ++i)
        out.add(even_labels[i], q[i]);
    return out;
}

GradedVector Superization::odd_square(const GradedVector& a, const GradedVector& b) const
{
    return project(square.sym(a, b));
}

RatVector Superization::even_even(const RatVector& u, const RatVector& v) const
{
    const auto& a = source;
    RatVector out(square.generators.size());
    auto g = [](const Label& l) { return GradedVector(l); };
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero())
            continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero())
                continue;
            const auto& [pa, pb] = square.generators[i];
            const auto& [pc, pd] = square.generators[j];
            RatVector acc(out.size());
            for (auto [a1, b1] : {std::pair{pa, pb}, std::pair{pb, pa}})
                for (auto [c1, d1] : {std::pair{pc, pd}, std::pair{pd, pc}}) {
                    RatVector t1 = square.sym(a.product(g(a1), a.product(b1, c1)), g(d1));
                    RatVector t2 = square.sym(a.product(g(c1), a.product(d1, a1)), g(b1));
                    for (std::size_t k = 0; k < acc.size(); ++k)
                        acc[k] += t1[k] - t2[k];
                }
            Rational c = normalization * u[i] * v[j];
            for (std::size_t k = 0; k < out.size(); ++k)
                out[k] += c * acc[k];
        }
    }
    return out;
}

GradedVector Superization::even_odd(const RatVector& u, const GradedVector& c) const
{
    GradedVector out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero())
            continue;
        const auto& [x, y] = square.generators[i];
        GradedVector v = source.product(GradedVector(x), source.product(GradedVector(y), c)) +
                         source.product(GradedVector(y), source.product(GradedVector(x), c));
        out.add(v, u[i]);
    }
    return out;
}

Superization superize(const AlgebraTable& a)
{
    return superize(a, conventions().sym_normalization);
}

Superization superize(const AlgebraTable& a, const Rational& normalization)
{
    if (a.kind() != AlgebraKind::antialgebra)
        throw std::invalid_argument("superize needs an antialgebra");
    Superization s;
    s.source = a;
    s.square = sym_square(a);
    s.normalization = normalization;
    for (std::size_t k : s.square.quotient.kept)
        s.even_labels.push_back(sym_label(s.square.generators[k].first, s.square.generators[k].second));
    const auto odd = a.odd_basis();
    const std::size_t q = s.even_labels.size();

    auto unit = [&](std::size_t i) {
        RatVector e(q);
        e[i] = 1;
        return s.square.quotient.lift(e);
    };
    AlgebraTable::Table t;
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            auto v = s.project(s.even_even(unit(i), unit(j)));
            if (!v.is_zero())
                t[{s.even_labels[i], s.even_labels[j]}] = v;
        }
        for (const auto& c : odd) {
            auto v = s.even_odd(unit(i), GradedVector(c));
            if (!v.is_zero()) {
                t[{s.even_labels[i], c}] = v;
                t[{c, s.even_labels[i]}] = -v;
            }
        }
    }
    for (const auto& x : odd)
        for (const auto& y : odd) {
            auto v = s.odd_square(GradedVector(x), GradedVector(y));
            if (!v.is_zero())
                t[{x, y}] = v;
        }
    s.algebra = AlgebraTable::finite("g(" + a.name() + ")", AlgebraKind::superalgebra, s.even_labels, odd, t, false);
    return s;
}

Report well_definedness(const Superization& s)
{
    Report r;
    r.subject = s.algebra.name();
    r.window = "full";
    r.checked = {identity::well_defined};
    const std::size_t n = s.square.generators.size();
    for (std::size_t k = 0; k < s.square.relations.size(); ++k) {
        const RatVector& rel = s.square.relations[k];
        std::string rname = "relation:" + std::to_string(k);
        for (std::size_t j = 0; j < n; ++j) {
            RatVector e(n);
            e[j] = 1;
            const auto& [ga, gb] = s.square.generators[j];
            std::string gname = sym_label(ga, gb).str();
            for (int order = 0; order < 2; ++order) {
                ++r.evaluations;
                auto v = s.project(order ? s.even_even(e, rel) : s.even_even(rel, e));
                if (!v.is_zero())
                    r.violations.push_back({identity::well_defined, order ? std::vector{gname, rname}
                                                                          : std::vector{rname, gname},
                                            v, "even bracket"});
            }
        }
        for (const auto& c : s.source.odd_basis()) {
            ++r.evaluations;
            auto v = s.even_odd(rel, GradedVector(c));
            if (!v.is_zero())
                r.violations.push_back({identity::well_defined, {rname, c.str()}, v, "odd bracket"});
        }
    }
    return r;
}

NormalizationCalibration calibrate_sym_normalization()
{
    NormalizationCalibration c;
    const AlgebraTable a = build_asl2();
    const std::pair<std::string, Rational> options[] = {
        {"sum", Rational(1)}, {"average", Rational(1, 4)}, {"half", Rational(1, 2)}};
    for (const auto& [name, value] : options) {
        bool ok = check_superalgebra(superize(a, value).algebra).passed();
        c.tried.push_back({name, ok});
        if (ok) {
            c.chosen = std::pair{name, value};
            break;
        }
    }
    return c;
}

DerivationComparison compare_to_derivations(const AlgebraTable& a)
{
    DerivationComparison c;
    Superization s = superize(a);
    DerivationAlgebra d = derivation_algebra(a);
    c.super_even = s.algebra.dim_even();
    c.super_odd = s.algebra.dim_odd();
    c.der_even = d.algebra.dim_even();
    c.der_odd = d.algebra.dim_odd();
    c.dims_equal = c.super_even == c.der_even && c.super_odd == c.der_odd;
    if (!c.dims_equal)
        return c;
    auto to_sup = match_osp12(s.algebra);
    auto to_der = match_osp12(d.algebra);
    if (!to_sup || !to_der)
        return c;
    // invert osp -> g(A), then compose with osp -> Der(A)
    const auto osp = build_osp12().basis();
    const auto sb = s.algebra.basis();
    std::vector<RatVector> cols;
    for (const auto& l : osp) {
        RatVector v(sb.size());
        for (std::size_t i = 0; i < sb.size(); ++i)
            v[i] = to_sup->at(l).coeff(sb[i]);
        cols.push_back(v);
    }
    RatMatrix m = RatMatrix::from_columns(cols, sb.size());
    std::map<Label, GradedVector> phi;
    for (std::size_t i = 0; i < sb.size(); ++i) {
        RatVector e(sb.size());
        e[i] = 1;
        auto x = solve(m, e);
        if (!x)
            return c;
        GradedVector img;
        for (std::size_t k = 0; k < osp.size(); ++k)
            img.add(to_der->at(osp[k]), (*x)[k]);
        phi[sb[i]] = img;
    }
    if (check_homomorphism(s.algebra, d.algebra, phi).passed())
        c.isomorphism = phi;
    return c;
}

}  // namespace antialg
