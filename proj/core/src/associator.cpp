#include "antialg/associator.hpp"

#include "antialg/axioms.hpp"

#include <memory>
#include <stdexcept>

namespace antialg {

GradedVector BilinearMap::operator()(const GradedVector& u, const GradedVector& v) const
{
    GradedVector out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms())
            out.add(m(a, b), ca * cb);
    return out;
}

BilinearMap BilinearMap::with_value(const Label& x, const Label& y, const GradedVector& v) const
{
    BilinearMap r = *this;
    Fn base = m;
    r.m = [base, x, y, v](const Label& a, const Label& b) { return (a == x && b == y) ? v : base(a, b); };
    return r;
}

BilinearMap BilinearMap::scaled_block(int px, int py, const Rational& c) const
{
    BilinearMap r = *this;
    Fn base = m;
    AlgebraTable car = carrier;
    r.m = [base, car, px, py, c](const Label& a, const Label& b) {
        auto v = base(a, b);
        return (car.parity(a) == px && car.parity(b) == py) ? c * v : v;
    };
    return r;
}

BilinearMap bracket_to_m(const AlgebraTable& a)
{
    if (a.kind() != AlgebraKind::antialgebra)
        throw std::invalid_argument("bracket_to_m needs an antialgebra");
    BilinearMap m;
    m.name = "m(" + a.name() + ")";
    m.carrier = a;
    m.m = [a](const Label& x, const Label& y) -> GradedVector {
        int px = a.parity(x), py = a.parity(y);
        if (px == 0 && py == 0)
            return half() * a.product(x, y);
        if (px == 1 && py == 0)
            return {};
        return a.product(x, y);
    };
    return m;
}

Report check_split_shape(const BilinearMap& m)
{
    Report r;
    r.subject = m.name;
    r.window = m.carrier.window() ? m.carrier.window()->str() : "full";
    r.checked = {identity::split};
    auto add = [&](std::vector<Label> w, const GradedVector& d, const char* what) {
        ++r.evaluations;
        if (d.is_zero())
            return;
        Violation v{identity::split, {}, d, what};
        for (const auto& l : w)
            v.witness.push_back(l.str());
        r.violations.push_back(std::move(v));
    };
    const auto V = m.carrier.even_basis(), W = m.carrier.odd_basis();
    if (!m.nonsymmetric_vv)
        for (const auto& x1 : V)
            for (const auto& x2 : V)
                add({x1, x2}, m(x1, x2) - m(x2, x1), "V x V not symmetric");
    for (const auto& y : W)
        for (const auto& x : V)
            add({y, x}, m(y, x), "W x V not zero");
    for (const auto& y1 : W)
        for (const auto& y2 : W)
            add({y1, y2}, m(y1, y2) + m(y2, y1), "W x W not skew");
    return r;
}

AlgebraTable m_to_bracket(const BilinearMap& m)
{
    if (!m.carrier.is_family()) {
        Report shape = check_split_shape(m);
        if (!shape.passed())
            throw std::invalid_argument("bilinear map violates the split shape at (" +
                                        shape.violations.front().witness[0] + ", " +
                                        shape.violations.front().witness[1] + ")");
    }
    AlgebraTable car = m.carrier;
    BilinearMap::Fn f = m.m;
    auto rule = [car, f](const Label& x, const Label& y) -> GradedVector {
        int px = car.parity(x), py = car.parity(y);
        if (px == 0 && py == 0)
            return Rational(2) * f(x, y);
        if (px == 1 && py == 0)
            return f(y, x);
        return f(x, y);
    };
    return car.with_rule(rule, "bracket(" + m.name + ")");
}

Report gerstenhaber_square(const BilinearMap& m)
{
    Report r;
    r.subject = m.name;
    r.window = m.carrier.window() ? m.carrier.window()->str() : "full";
    r.checked = {identity::assoc};
    auto basis = m.carrier.basis();
    for (const auto& a : basis)
        for (const auto& b : basis) {
            GradedVector ab = m(a, b);
            for (const auto& c : basis) {
                ++r.evaluations;
                GradedVector d = m(ab, GradedVector(c)) - m(GradedVector(a), m(b, c));
                if (!d.is_zero())
                    r.violations.push_back({identity::assoc, {a.str(), b.str(), c.str()}, d, ""});
            }
        }
    return r;
}

Report skew_equivalence(const BilinearMap& m)
{
    Report r;
    r.subject = m.name;
    r.window = m.carrier.window() ? m.carrier.window()->str() : "full";
    r.checked = {identity::first, identity::second, identity::third, identity::fourth};
    const auto V = m.carrier.even_basis(), W = m.carrier.odd_basis();
    auto M = [&](const GradedVector& u, const GradedVector& v) { return m(u, v); };
    auto g = [](const Label& l) { return GradedVector(l); };
    // identity -> witness -> vanishes?
    std::map<std::string, std::map<std::vector<std::string>, bool>> zero;
    auto record = [&](const char* id, std::vector<Label> w, const GradedVector& d) {
        ++r.evaluations;
        std::vector<std::string> ws;
        for (const auto& l : w)
            ws.push_back(l.str());
        zero[id][ws] = d.is_zero();
        if (!d.is_zero())
            r.violations.push_back({id, ws, d, ""});
    };
    for (const auto& x1 : V)
        for (const auto& x2 : V)
            for (const auto& x3 : V)
                record(identity::first, {x1, x2, x3}, M(m(x1, x2), g(x3)) - M(g(x1), m(x2, x3)));
    for (const auto& x1 : V)
        for (const auto& x2 : V)
            for (const auto& y : W)
                record(identity::second, {x1, x2, y}, M(m(x1, x2), g(y)) - M(g(x1), m(x2, y)));
    for (const auto& x : V)
        for (const auto& y1 : W)
            for (const auto& y2 : W)
                record(identity::third, {x, y1, y2},
                       half() * M(m(x, y1), g(y2)) - half() * M(m(x, y2), g(y1)) - M(g(x), m(y1, y2)));
    for (const auto& y1 : W)
        for (const auto& y2 : W)
            for (const auto& y3 : W)
                record(identity::fourth, {y1, y2, y3},
                       M(m(y1, y2), g(y3)) + M(m(y2, y3), g(y1)) + M(m(y3, y1), g(y2)));

    Report ax = check_antialgebra(m_to_bracket(m));
    for (const auto& id : {identity::ass_comm, identity::cact, identity::icomm, identity::jack})
        r.checked.push_back(id);
    r.evaluations += ax.evaluations;
    for (const auto& v : ax.violations)
        if (v.identity != std::string(identity::skew))
            r.violations.push_back(v);
    std::map<std::string, std::map<std::vector<std::string>, bool>> ax_zero;
    for (const auto& v : ax.violations)
        ax_zero[v.identity][v.witness] = false;

    const std::pair<const char*, const char*> pairs[] = {{identity::first, identity::ass_comm},
                                                         {identity::second, identity::cact},
                                                         {identity::third, identity::icomm},
                                                         {identity::fourth, identity::jack}};
    r.checked.push_back(identity::pairing);
    for (const auto& [mine, theirs] : pairs)
        for (const auto& [w, z] : zero[mine]) {
            bool their_zero = !ax_zero[theirs].count(w);
            if (z != their_zero)
                r.violations.push_back({identity::pairing, w, {},
                                        std::string(mine) + (z ? " holds" : " fails") + " but " + theirs +
                                            (their_zero ? " holds" : " fails")});
        }
    return r;
}

BilinearMap full_map(std::string name, std::vector<Label> basis,
                     std::map<std::pair<Label, Label>, GradedVector> table)
{
    BilinearMap m;
    m.name = name;
    m.carrier = AlgebraTable::finite(name, AlgebraKind::antialgebra, basis, {}, {});
    m.split = false;
    m.nonsymmetric_vv = true;
    auto t = std::make_shared<const std::map<std::pair<Label, Label>, GradedVector>>(std::move(table));
    m.m = [t](const Label& x, const Label& y) {
        auto it = t->find({x, y});
        return it == t->end() ? GradedVector() : it->second;
    };
    return m;
}

BilinearMap matrix_algebra(std::size_t n)
{
    std::vector<Label> basis;
    auto unit = [n](std::size_t i, std::size_t j) { return Label("E", Rational(static_cast<long>(i * n + j))); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            basis.push_back(unit(i, j));
    std::map<std::pair<Label, Label>, GradedVector> t;
    // E_ij E_jk = E_ik
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                t[{unit(i, j), unit(j, k)}] = GradedVector(unit(i, k));
    return full_map("gl" + std::to_string(n), basis, t);
}

}  // namespace antialg
