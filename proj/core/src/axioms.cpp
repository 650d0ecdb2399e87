#include "antialg/axioms.hpp"

#include "antialg/matrix.hpp"

namespace antialg {

namespace {

std::string window_str(const AlgebraTable& a)
{
    return a.window() ? a.window()->str() : "full";
}

void record(Report& r, const char* id, std::vector<Label> witness, const GradedVector& defect)
{
    ++r.evaluations;
    if (defect.is_zero())
        return;
    Violation v;
    v.identity = id;
    for (const auto& l : witness)
        v.witness.push_back(l.str());
    v.defect = defect;
    r.violations.push_back(std::move(v));
}

}  // namespace

Report check_antialgebra(const AlgebraTable& a)
{
    Report r;
    r.subject = a.name();
    r.window = window_str(a);
    r.checked = {identity::skew, identity::ass_comm, identity::cact, identity::icomm, identity::jack};
    const auto ev = a.even_basis();
    const auto od = a.odd_basis();
    const auto all = a.basis();
    auto P = [&](const Label& x, const Label& y) { return a.product(x, y); };
    auto PV = [&](const Label& x, const GradedVector& v) { return a.product(GradedVector(x), v); };
    auto VP = [&](const GradedVector& v, const Label& y) { return a.product(v, GradedVector(y)); };

    for (const auto& x : all)
        for (const auto& y : all) {
            int s = sign_pow(a.parity(x) * a.parity(y));
            record(r, identity::skew, {x, y}, P(x, y) - Rational(s) * P(y, x));
        }
    for (const auto& x1 : ev)
        for (const auto& x2 : ev)
            for (const auto& x3 : ev)
                record(r, identity::ass_comm, {x1, x2, x3}, PV(x1, P(x2, x3)) - VP(P(x1, x2), x3));
    for (const auto& x1 : ev)
        for (const auto& x2 : ev)
            for (const auto& y : od)
                record(r, identity::cact, {x1, x2, y}, PV(x1, P(x2, y)) - half() * VP(P(x1, x2), y));
    for (const auto& x : ev)
        for (const auto& y1 : od)
            for (const auto& y2 : od)
                record(r, identity::icomm, {x, y1, y2},
                       PV(x, P(y1, y2)) - VP(P(x, y1), y2) - PV(y1, P(x, y2)));
    for (const auto& y1 : od)
        for (const auto& y2 : od)
            for (const auto& y3 : od)
                record(r, identity::jack, {y1, y2, y3},
                       PV(y1, P(y2, y3)) + PV(y2, P(y3, y1)) + PV(y3, P(y1, y2)));
    return r;
}

Report check_superalgebra(const AlgebraTable& a)
{
    Report r;
    r.subject = a.name();
    r.window = window_str(a);
    r.checked = {identity::super_skew, identity::super_jacobi};
    const auto all = a.basis();
    auto P = [&](const Label& x, const Label& y) { return a.product(x, y); };
    auto PV = [&](const Label& x, const GradedVector& v) { return a.product(GradedVector(x), v); };
    auto VP = [&](const GradedVector& v, const Label& y) { return a.product(v, GradedVector(y)); };
    for (const auto& x : all)
        for (const auto& y : all) {
            int s = sign_pow(a.parity(x) * a.parity(y));
            record(r, identity::super_skew, {x, y}, P(x, y) + Rational(s) * P(y, x));
        }
    for (const auto& x : all)
        for (const auto& y : all) {
            int s = sign_pow(a.parity(x) * a.parity(y));
            auto xy = P(x, y);
            for (const auto& z : all)
                record(r, identity::super_jacobi, {x, y, z},
                       PV(x, P(y, z)) - VP(xy, z) - Rational(s) * PV(y, P(x, z)));
        }
    return r;
}

Report check_axioms(const AlgebraTable& a)
{
    return a.kind() == AlgebraKind::antialgebra ? check_antialgebra(a) : check_superalgebra(a);
}

std::optional<GradedVector> even_unit(const AlgebraTable& a)
{
    if (a.is_family())
        return std::nullopt;
    const auto ev = a.even_basis();
    const std::size_t n = ev.size();
    if (n == 0)
        return std::nullopt;
    // unknown u = sum c_i ev_i ; equations: coefficient of ev_k in ]u, ev_j[ equals delta_jk
    RatMatrix m(n * n, n);
    RatVector rhs(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto p = a.product(ev[i], ev[j]);
            for (std::size_t k = 0; k < n; ++k)
                m.set(j * n + k, i, p.coeff(ev[k]));
        }
    for (std::size_t j = 0; j < n; ++j)
        rhs[j * n + j] = 1;
    auto sol = solve(m, rhs);
    if (!sol)
        return std::nullopt;
    GradedVector u;
    for (std::size_t i = 0; i < n; ++i)
        u.add(ev[i], (*sol)[i]);
    return u;
}

}  // namespace antialg
