#include "antialg/representations.hpp"

#include "antialg/catalog.hpp"
#include "antialg/conventions.hpp"
#include "antialg/superization.hpp"

#include <random>
#include <stdexcept>

namespace antialg {

// ---------------------------------------------------------------- SuperPoly1

SuperPoly1 SuperPoly1::monomial(long k, int e, const Rational& c)
{
    SuperPoly1 p;
    p.add(k, e, c);
    return p;
}

void SuperPoly1::add(long k, int e, const Rational& c)
{
    if (c.is_zero())
        return;
    auto& slot = terms_[{k, e}];
    slot += c;
    if (slot.is_zero())
        terms_.erase({k, e});
}

ParityClass SuperPoly1::parity() const
{
    bool ev = false, od = false;
    for (const auto& [key, c] : terms_)
        (key.second ? od : ev) = true;
    if (ev && od)
        return ParityClass::mixed;
    return od ? ParityClass::odd : ParityClass::even;
}

SuperPoly1 operator+(const SuperPoly1& a, const SuperPoly1& b)
{
    SuperPoly1 r = a;
    for (const auto& [key, c] : b.terms())
        r.add(key.first, key.second, c);
    return r;
}

SuperPoly1 operator*(const Rational& c, const SuperPoly1& a)
{
    SuperPoly1 r;
    for (const auto& [key, v] : a.terms())
        r.add(key.first, key.second, c * v);
    return r;
}

SuperPoly1 operator*(const SuperPoly1& a, const SuperPoly1& b)
{
    // xi commutes with x and xi^2 = 0, so no signs appear
    SuperPoly1 r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            if (!(ka.second && kb.second))
                r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

SuperPoly1 SuperPoly1::dx() const
{
    SuperPoly1 r;
    for (const auto& [key, c] : terms_)
        r.add(key.first - 1, key.second, c * Rational(key.first));
    return r;
}

SuperPoly1 SuperPoly1::dxi() const
{
    SuperPoly1 r;
    for (const auto& [key, c] : terms_)
        if (key.second)
            r.add(key.first, 0, c);
    return r;
}

SuperPoly1 SuperPoly1::D() const
{
    return dxi() + monomial(0, 1) * dx();
}

SuperPoly1 SuperPoly1::Dbar() const
{
    return dxi() + monomial(0, 1, -1) * dx();
}

std::string SuperPoly1::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += c.str();
        if (key.second)
            s += " xi";
        if (key.first != 0)
            s += " x^" + std::to_string(key.first);
    }
    return s;
}

// ---------------------------------------------------------------- module + operators

std::size_t PolySuperModule::index(long k, int e) const
{
    if (!contains(k))
        throw std::out_of_range("monomial outside window");
    return static_cast<std::size_t>(k - kmin) + (e ? block() : 0);
}

Label PolySuperModule::label(std::size_t i) const
{
    bool odd = i >= block();
    long k = kmin + static_cast<long>(odd ? i - block() : i);
    return Label(odd ? "xi.x" : "x", Rational(k));
}

SuperPoly1 PolySuperModule::element(std::size_t i) const
{
    bool odd = i >= block();
    long k = kmin + static_cast<long>(odd ? i - block() : i);
    return SuperPoly1::monomial(k, odd ? 1 : 0);
}

WOp WOp::zero(std::size_t dim, int parity)
{
    return {parity, RatMatrix(dim, dim), std::vector<bool>(dim, true)};
}

WOp WOp::identity(std::size_t dim)
{
    return {0, RatMatrix::identity(dim), std::vector<bool>(dim, true)};
}

WOp WOp::from_matrix(const RatMatrix& m, int parity)
{
    return {parity, m, std::vector<bool>(m.cols(), true)};
}

bool WOp::all_valid() const
{
    for (bool v : valid)
        if (!v)
            return false;
    return true;
}

WOp compose(const WOp& a, const WOp& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("operator dimension mismatch");
    WOp r{parity_add(a.parity, b.parity), a.m * b.m, b.valid};
    for (const auto& [rc, c] : b.m.entries())
        if (!a.valid[rc.first])
            r.valid[rc.second] = false;
    return r;
}

WOp operator+(const WOp& a, const WOp& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("operator dimension mismatch");
    WOp r{a.parity, a.m + b.m, a.valid};
    for (std::size_t j = 0; j < r.valid.size(); ++j)
        r.valid[j] = a.valid[j] && b.valid[j];
    return r;
}

WOp operator-(const WOp& a, const WOp& b)
{
    return a + Rational(-1) * b;
}

WOp operator*(const Rational& c, const WOp& a)
{
    return {a.parity, c * a.m, a.valid};
}

WOp anticommutator(const WOp& x, const WOp& y)
{
    return compose(x, y) + Rational(sign_pow(x.parity * y.parity)) * compose(y, x);
}

WOp supercommutator(const WOp& x, const WOp& y)
{
    return compose(x, y) - Rational(sign_pow(x.parity * y.parity)) * compose(y, x);
}

std::vector<std::size_t> differing_columns(const WOp& a, const WOp& b)
{
    RatMatrix d = a.m - b.m;
    std::vector<bool> bad(a.dim(), false);
    for (const auto& [rc, c] : d.entries())
        if (a.valid[rc.second] && b.valid[rc.second])
            bad[rc.second] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < bad.size(); ++j)
        if (bad[j])
            out.push_back(j);
    return out;
}

std::size_t common_valid_columns(const WOp& a, const WOp& b)
{
    std::size_t n = 0;
    for (std::size_t j = 0; j < a.dim(); ++j)
        n += a.valid[j] && b.valid[j];
    return n;
}

WOp poly_operator(const PolySuperModule& mod, const std::function<SuperPoly1(const SuperPoly1&)>& op, int parity)
{
    const std::size_t n = mod.dim();
    WOp r = WOp::zero(n, parity);
    for (std::size_t j = 0; j < n; ++j) {
        SuperPoly1 img = op(mod.element(j));
        bool inside = true;
        for (const auto& [key, c] : img.terms())
            inside = inside && mod.contains(key.first);
        if (!inside) {
            r.valid[j] = false;
            continue;
        }
        for (const auto& [key, c] : img.terms())
            r.m.set(mod.index(key.first, key.second), j, c);
    }
    return r;
}

// ---------------------------------------------------------------- representations

WOp MatrixRep::operator()(const GradedVector& v) const
{
    std::optional<WOp> acc;
    for (const auto& [l, c] : v.terms()) {
        WOp t = c * chi(l);
        acc = acc ? *acc + t : t;
    }
    return acc ? *acc : WOp::zero(dim, 0);
}

MatrixRep finite_rep(std::string name, const AlgebraTable& a, std::map<Label, RatMatrix> chi, std::size_t d0,
                     std::size_t d1)
{
    MatrixRep r;
    r.name = std::move(name);
    r.algebra = a;
    r.labels = a.basis();
    r.dim = d0 + d1;
    std::size_t dim = r.dim;
    auto ops = std::make_shared<std::map<Label, WOp>>();
    for (const auto& l : r.labels) {
        auto it = chi.find(l);
        RatMatrix m = it == chi.end() ? RatMatrix(dim, dim) : it->second;
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument("chi(" + l.str() + ") has the wrong size");
        // parity check: even operators preserve the grading
        int p = a.parity(l);
        for (const auto& [rc, c] : m.entries()) {
            int pr = rc.first >= d0, pc = rc.second >= d0;
            if (parity_add(pr, pc) != p)
                throw std::invalid_argument("chi(" + l.str() + ") is not of parity " + std::to_string(p));
        }
        (*ops)[l] = WOp::from_matrix(m, p);
    }
    r.chi = [ops, dim](const Label& l) {
        auto it = ops->find(l);
        if (it == ops->end())
            throw std::out_of_range("representation undefined on " + l.str());
        return it->second;
    };
    r.module_label = [](std::size_t i) { return Label("v", Rational(static_cast<long>(i))); };
    return r;
}

MatrixRep zero_rep(const AlgebraTable& a, std::size_t d0, std::size_t d1)
{
    return finite_rep("zero", a, {}, d0, d1);
}

namespace {

GradedVector column_vector(const MatrixRep& r, const WOp& d, std::size_t j)
{
    GradedVector v;
    for (std::size_t i = 0; i < d.dim(); ++i) {
        Rational c = d.m.at(i, j);
        if (!c.is_zero())
            v.add(r.module_label(i), c);
    }
    return v;
}

// Compares lhs and rhs on common valid columns; evaluations = compared columns.
void compare_ops(Report& rep, const MatrixRep& r, const char* id, std::vector<std::string> witness, const WOp& lhs,
                 const WOp& rhs)
{
    rep.evaluations += common_valid_columns(lhs, rhs);
    WOp d = lhs - rhs;
    for (std::size_t j : differing_columns(lhs, rhs)) {
        auto w = witness;
        w.push_back(r.module_label(j).str());
        rep.violations.push_back({id, w, column_vector(r, d, j), ""});
    }
}

Report check_pairs(const MatrixRep& r, bool super)
{
    Report rep;
    rep.subject = r.name;
    rep.window = r.algebra.window() ? r.algebra.window()->str() : "full";
    const char* id = super ? identity::super_rep : identity::rep;
    rep.checked = {id};
    std::map<Label, WOp> cache;
    auto chi = [&](const Label& l) -> const WOp& {
        auto it = cache.find(l);
        if (it == cache.end())
            it = cache.emplace(l, r.chi(l)).first;
        return it->second;
    };
    for (const auto& x : r.labels)
        for (const auto& y : r.labels) {
            WOp lhs = super ? supercommutator(chi(x), chi(y)) : anticommutator(chi(x), chi(y));
            WOp rhs = r(r.algebra.product(x, y));
            compare_ops(rep, r, id, {x.str(), y.str()}, lhs, rhs);
        }
    return rep;
}

}  // namespace

Report check_rep(const MatrixRep& r)
{
    return check_pairs(r, false);
}

Report check_super_rep(const MatrixRep& r)
{
    return check_pairs(r, true);
}

MatrixRep pullback(const MatrixRep& r, const AlgebraTable& src, const std::map<Label, GradedVector>& phi)
{
    MatrixRep p;
    p.name = r.name + " o phi";
    p.algebra = src;
    p.labels = src.basis();
    p.dim = r.dim;
    p.module_label = r.module_label;
    p.chi = [r, phi](const Label& l) { return r(phi.at(l)); };
    return p;
}

MatrixRep build_FRep(long n, long k, const Rational& c_l, const Rational& c_e, int odd_sign)
{
    PolySuperModule mod{-k, k};
    MatrixRep r;
    r.name = "FRep";
    r.algebra = build_AK1(Window::symmetric(Rational(n)), odd_sign);
    r.labels = r.algebra.basis();
    r.dim = mod.dim();
    r.module_label = [mod](std::size_t i) { return mod.label(i); };
    r.chi = [mod, c_l, c_e](const Label& l) -> WOp {
        if (l.family == "l") {
            long pw = (l.idx() + half()).to_long();
            return poly_operator(
                mod, [&](const SuperPoly1& f) { return c_l * (SuperPoly1::monomial(pw, 0) * f.D()); }, 1);
        }
        if (l.family == "e") {
            long pw = l.idx().to_long();
            return poly_operator(
                mod, [&](const SuperPoly1& f) { return c_e * (SuperPoly1::monomial(pw, 1) * f.D()); }, 0);
        }
        throw std::out_of_range("FRep undefined on " + l.str());
    };
    return r;
}

MatrixRep build_FRep(long n, long k)
{
    const auto& c = conventions();
    return build_FRep(n, k, c.frep_c_l, c.frep_c_e, c.frep_odd_sign);
}

FRepCalibration calibrate_frep(long n, long k)
{
    FRepCalibration cal;
    const Rational vals[] = {Rational(1), Rational(-1), half(), -half()};
    for (int sign : {1, -1})
        for (const auto& cl : vals)
            for (const auto& ce : vals) {
                bool ok = check_rep(build_FRep(n, k, cl, ce, sign)).passed();
                FRepCalibration::Trial t{cl, ce, sign, ok};
                cal.trials.push_back(t);
                if (ok)
                    cal.passing.push_back(t);
            }
    // y -> -y flips c_l only; count orbits and pick the positive representative
    std::vector<FRepCalibration::Trial> reps;
    for (const auto& t : cal.passing) {
        bool seen = false;
        for (const auto& u : reps)
            seen = seen || (u.c_e == t.c_e && u.odd_sign == t.odd_sign && (u.c_l == t.c_l || u.c_l == -t.c_l));
        if (!seen)
            reps.push_back(t.c_l.sign() > 0 ? t : FRepCalibration::Trial{-t.c_l, t.c_e, t.odd_sign, true});
    }
    cal.orbits = reps.size();
    if (reps.size() == 1)
        cal.chosen = reps.front();
    return cal;
}

Asl2Operators asl2_operators(const MatrixRep& r)
{
    return {Rational(2) * r.chi(Label("eps")), Rational(2) * r.chi(Label("a")), Rational(2) * r.chi(Label("b"))};
}

Report check_asl2_rep(const Asl2Operators& s)
{
    MatrixRep lab;
    lab.name = "asl2 system";
    lab.dim = s.E.dim();
    lab.module_label = [](std::size_t i) { return Label("v", Rational(static_cast<long>(i))); };
    Report rep;
    rep.subject = "systemrep";
    rep.window = s.E.all_valid() ? "full" : "interior";
    rep.checked = {identity::sys_ab, identity::sys_ae, identity::sys_be, identity::sys_ee};
    compare_ops(rep, lab, identity::sys_ab, {}, compose(s.A, s.B) - compose(s.B, s.A), s.E);
    compare_ops(rep, lab, identity::sys_ae, {}, compose(s.A, s.E) + compose(s.E, s.A), s.A);
    compare_ops(rep, lab, identity::sys_be, {}, compose(s.B, s.E) + compose(s.E, s.B), s.B);
    compare_ops(rep, lab, identity::sys_ee, {}, compose(s.E, s.E), s.E);
    return rep;
}

WOp ghost_casimir(const WOp& a, const WOp& b)
{
    return compose(a, b) - compose(b, a) - half() * WOp::identity(a.dim());
}

Report check_ghost_casimir(const Asl2Operators& s)
{
    const std::size_t n = s.E.dim();
    std::vector<WOp> lhs{compose(s.A, s.B) - compose(s.B, s.A), compose(s.A, s.E) + compose(s.E, s.A),
                         compose(s.B, s.E) + compose(s.E, s.B), compose(s.E, s.E)};
    std::vector<const WOp*> rhs{&s.E, &s.A, &s.B, &s.E};
    std::vector<bool> holds(n, true);
    for (std::size_t r = 0; r < lhs.size(); ++r) {
        for (std::size_t j = 0; j < n; ++j)
            holds[j] = holds[j] && lhs[r].valid[j] && rhs[r]->valid[j];
        for (std::size_t j : differing_columns(lhs[r], *rhs[r]))
            holds[j] = false;
    }
    WOp g = ghost_casimir(s.A, s.B);
    WOp g2 = compose(g, g);
    WOp quarter = Rational(1, 4) * WOp::identity(n);
    for (std::size_t j = 0; j < n; ++j)
        if (!holds[j])
            g2.valid[j] = false;
    MatrixRep lab;
    lab.dim = n;
    lab.module_label = [](std::size_t i) { return Label("v", Rational(static_cast<long>(i))); };
    Report rep;
    rep.subject = "ghost Casimir";
    rep.window = "where systemrep holds";
    rep.checked = {identity::ghost};
    compare_ops(rep, lab, identity::ghost, {}, g2, quarter);
    return rep;
}

Certificate finite_triviality_certificate(const RatMatrix& e, const RatMatrix& a, const RatMatrix& b,
                                          std::size_t d0, std::size_t d1)
{
    Certificate c;
    const std::size_t n = d0 + d1;
    for (const RatMatrix* m : {&e, &a, &b})
        if (m->rows() != n || m->cols() != n) {
            c.failure = "matrix size does not match " + std::to_string(d0) + "|" + std::to_string(d1);
            return c;
        }
    auto homogeneous = [&](const RatMatrix& m, int p) {
        for (const auto& [rc, v] : m.entries())
            if (parity_add(rc.first >= d0, rc.second >= d0) != p)
                return false;
        return true;
    };
    bool pre = homogeneous(e, 0) && homogeneous(a, 1) && homogeneous(b, 1) && (a * b - b * a) == e &&
               (a * e + e * a) == a && (b * e + e * b) == b && (e * e) == e;
    c.precondition = pre;
    if (!pre) {
        c.failure = "input does not satisfy the asl(2) relations exactly";
        return c;
    }
    auto step = [&](std::string name, bool ok) {
        c.steps.push_back({std::move(name), ok});
        return ok;
    };
    Rational tr = e.trace();
    bool ok = step("trace(E) = trace(AB - BA) = 0", tr.is_zero() && (a * b).trace() == (b * a).trace());
    ok = step("E^2 = E", (e * e) == e) && ok;
    ok = step("rank(E) = trace(E) = 0", Rational(static_cast<long>(rank(e))) == tr && tr.is_zero()) && ok;
    ok = step("E = 0", e.is_zero()) && ok;
    ok = step("A = AE + EA = 0", a.is_zero() && (a * e + e * a) == a) && ok;
    ok = step("B = BE + EB = 0", b.is_zero() && (b * e + e * b) == b) && ok;
    c.passed = ok;
    if (!ok)
        c.failure = "proof chain broken";
    return c;
}

FuzzResult fuzz_triviality(std::size_t d0, std::size_t d1, std::size_t tries, std::uint64_t seed)
{
    FuzzResult res;
    const std::size_t n = d0 + d1;
    auto consider = [&](const RatMatrix& e, const RatMatrix& a, const RatMatrix& b) {
        ++res.candidates;
        if (!((a * b - b * a) == e && (a * e + e * a) == a && (b * e + e * b) == b && (e * e) == e))
            return;
        ++res.exact_solutions;
        if (!(e.is_zero() && a.is_zero() && b.is_zero()))
            ++res.nonzero_solutions;
        if (!finite_triviality_certificate(e, a, b, d0, d1).passed)
            res.all_certified = false;
    };
    // slots: (row, col) of even blocks for E, odd blocks for A and B
    std::vector<std::pair<std::size_t, std::size_t>> even_slots, odd_slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            ((i >= d0) == (j >= d0) ? even_slots : odd_slots).push_back({i, j});
    const std::size_t total = even_slots.size() + 2 * odd_slots.size();
    auto build = [&](const std::vector<int>& v) {
        RatMatrix e(n, n), a(n, n), b(n, n);
        std::size_t k = 0;
        for (auto [i, j] : even_slots)
            e.set(i, j, v[k++]);
        for (auto [i, j] : odd_slots)
            a.set(i, j, v[k++]);
        for (auto [i, j] : odd_slots)
            b.set(i, j, v[k++]);
        consider(e, a, b);
    };
    if (d0 == 1 && d1 == 1) {
        std::vector<int> v(total, -1);
        while (true) {
            build(v);
            std::size_t k = 0;
            while (k < total && v[k] == 1)
                v[k++] = -1;
            if (k == total)
                break;
            ++v[k];
        }
        return res;
    }
    std::mt19937_64 rng(seed);
    // sparse candidates with 0..4 nonzero entries, so exact solutions actually turn up
    std::uniform_int_distribution<std::size_t> count(0, std::min<std::size_t>(4, total)), slot(0, total - 1);
    std::uniform_int_distribution<int> entry(0, 1);
    for (std::size_t t = 0; t < tries; ++t) {
        std::vector<int> v(total, 0);
        for (std::size_t c = count(rng); c > 0; --c)
            v[slot(rng)] = entry(rng) ? 1 : -1;
        build(v);
    }
    return res;
}

MatrixRep extend_to_super(const MatrixRep& r)
{
    auto s = std::make_shared<Superization>(superize(r.algebra));
    MatrixRep e;
    e.name = "ext(" + r.name + ")";
    e.algebra = s->algebra;
    e.labels = s->algebra.basis();
    e.dim = r.dim;
    e.module_label = r.module_label;
    e.chi = [r, s](const Label& l) -> WOp {
        for (std::size_t i = 0; i < s->even_labels.size(); ++i)
            if (s->even_labels[i] == l) {
                const auto& [a, b] = s->square.generators[s->square.quotient.kept[i]];
                WOp xa = r.chi(a), xb = r.chi(b);
                return compose(xa, xb) + compose(xb, xa);
            }
        return r.chi(l);
    };
    return e;
}

Report extension_well_definedness(const MatrixRep& r)
{
    Superization s = superize(r.algebra);
    Report rep;
    rep.subject = "ext(" + r.name + ")";
    rep.window = "interior";
    rep.checked = {identity::rep_well_defined};
    for (std::size_t k = 0; k < s.square.relations.size(); ++k) {
        std::optional<WOp> acc;
        for (std::size_t g = 0; g < s.square.generators.size(); ++g) {
            const Rational& c = s.square.relations[k][g];
            if (c.is_zero())
                continue;
            const auto& [a, b] = s.square.generators[g];
            WOp xa = r.chi(a), xb = r.chi(b);
            WOp t = c * (compose(xa, xb) + compose(xb, xa));
            acc = acc ? *acc + t : t;
        }
        if (acc)
            compare_ops(rep, r, identity::rep_well_defined, {"relation:" + std::to_string(k)}, *acc,
                        WOp::zero(r.dim, 0));
    }
    return rep;
}

MatrixRep k1_bridge(const MatrixRep& frep, long n, const Rational& alpha)
{
    MatrixRep r;
    r.name = "K1 bridge";
    r.algebra = build_K1(n);
    r.labels = r.algebra.basis();
    r.dim = frep.dim;
    r.module_label = frep.module_label;
    r.chi = [frep, alpha](const Label& l) -> WOp {
        if (l.family == "xi")
            return alpha * frep.chi(Label("l", l.idx()));
        if (l.family == "x") {
            Label li("l", half()), lj("l", l.idx() - half());
            WOp a = frep.chi(li), b = frep.chi(lj);
            return (alpha * alpha * half()) * (compose(a, b) + compose(b, a));
        }
        throw std::out_of_range("K(1) label expected: " + l.str());
    };
    return r;
}

Report k1_bridge_well_definedness(const MatrixRep& frep, long n)
{
    Report rep;
    rep.subject = "K1 bridge";
    rep.window = Window::symmetric(Rational(n)).str();
    rep.checked = {identity::rep_well_defined};
    auto sym = [&](const Rational& i, const Rational& j) {
        WOp a = frep.chi(Label("l", i)), b = frep.chi(Label("l", j));
        return compose(a, b) + compose(b, a);
    };
    for (long m = -n; m <= n; ++m) {
        WOp ref = sym(half(), Rational(m) - half());
        for (long t = -n; t < n; ++t) {
            Rational i = Rational(t) + half();
            compare_ops(rep, frep, identity::rep_well_defined, {"x:" + std::to_string(m), "split:" + i.str()},
                        sym(i, Rational(m) - i), ref);
        }
    }
    return rep;
}

BridgeCalibration calibrate_k1_bridge(const MatrixRep& frep, long n)
{
    BridgeCalibration cal;
    for (const Rational& a : {Rational(1), Rational(-1), Rational(2), Rational(-2), half(), -half()}) {
        bool ok = check_super_rep(k1_bridge(frep, n, a)).passed();
        cal.trials.push_back({a, ok});
        if (ok && a.sign() > 0 && !cal.chosen)
            cal.chosen = a;
    }
    return cal;
}

WOp contact_field(const PolySuperModule& mod, const SuperPoly1& h, const Rational& s, bool dbar)
{
    auto p = h.parity();
    if (p == ParityClass::mixed)
        throw std::invalid_argument("contact_field needs a homogeneous h");
    SuperPoly1 dh = h.D();
    return poly_operator(
        mod,
        [&](const SuperPoly1& f) { return h * f.dx() + s * (dh * (dbar ? f.Dbar() : f.D())); },
        p == ParityClass::odd ? 1 : 0);
}

WOp contact_field(const PolySuperModule& mod, const SuperPoly1& h, ContactMode mode)
{
    if (mode == ContactMode::literal)
        return contact_field(mod, h, Rational(2), false);
    const auto& c = conventions();
    return contact_field(mod, h, c.contact_s, c.contact_dbar);
}

Report check_contact_K1(long n, long k, const Rational& s, bool dbar, const Rational& c)
{
    PolySuperModule mod{-k, k};
    MatrixRep r;
    r.name = "contact";
    r.algebra = build_K1(n);
    r.labels = r.algebra.basis();
    r.dim = mod.dim();
    r.module_label = [mod](std::size_t i) { return mod.label(i); };
    r.chi = [mod, s, dbar, c](const Label& l) -> WOp {
        if (l.family == "x")
            return contact_field(mod, SuperPoly1::monomial(l.idx().to_long() + 1, 0), s, dbar);
        return contact_field(mod, SuperPoly1::monomial((l.idx() + half()).to_long(), 1, c), s, dbar);
    };
    return check_super_rep(r);
}

ContactCalibration calibrate_contact(long n, long k)
{
    ContactCalibration cal;
    const Rational vals[] = {Rational(2), Rational(-2), Rational(1), Rational(-1), half(), -half()};
    for (const auto& s : vals)
        for (bool dbar : {false, true})
            for (const auto& c : vals) {
                bool ok = check_contact_K1(n, k, s, dbar, c).passed();
                ContactCalibration::Trial t{s, dbar, c, ok};
                cal.trials.push_back(t);
                if (ok) {
                    cal.passing.push_back(t);
                    if (c.sign() > 0 && !cal.chosen)
                        cal.chosen = t;
                }
            }
    return cal;
}

}  // namespace antialg
