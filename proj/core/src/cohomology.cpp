#include "antialg/cohomology.hpp"

#include "antialg/axioms.hpp"

#include <algorithm>
#include <stdexcept>

namespace antialg {

namespace {

// by value: the loops below iterate over temporaries
GradedVector::Terms terms_of(const GradedVector& v)
{
    return v.terms();
}

}  // namespace

Report check_module(const AntiModule& m)
{
    Report r = check_antialgebra(semidirect(m.algebra, m));
    r.subject = m.name + " over " + m.algebra.name();
    return r;
}

// ---------------------------------------------------------------- cochains

GradedVector Cochain::operator()(const std::vector<Label>& xs, std::vector<Label> ys) const
{
    if (!fn)
        return {};
    int sign = 1;
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = 0; j + 1 < ys.size() - i; ++j) {
            if (ys[j] == ys[j + 1])
                return {};
            if (ys[j + 1] < ys[j]) {
                std::swap(ys[j], ys[j + 1]);
                sign = -sign;
            }
        }
    for (std::size_t j = 0; j + 1 < ys.size(); ++j)
        if (ys[j] == ys[j + 1])
            return {};
    GradedVector v = fn(xs, ys);
    return sign == 1 ? v : -v;
}

namespace {

void expand(const Cochain& phi, const std::vector<GradedVector>& xs, const std::vector<GradedVector>& ys,
            std::size_t pos, std::vector<Label>& lx, std::vector<Label>& ly, const Rational& coef, GradedVector& out)
{
    const std::size_t nx = xs.size();
    if (pos == nx + ys.size()) {
        out.add(phi(lx, ly), coef);
        return;
    }
    const GradedVector& v = pos < nx ? xs[pos] : ys[pos - nx];
    for (const auto& [l, c] : v.terms()) {
        if (pos < nx)
            lx.push_back(l);
        else
            ly.push_back(l);
        expand(phi, xs, ys, pos + 1, lx, ly, coef * c, out);
        if (pos < nx)
            lx.pop_back();
        else
            ly.pop_back();
    }
}

std::vector<GradedVector> singletons(const std::vector<Label>& ls, std::size_t from, std::size_t to)
{
    std::vector<GradedVector> out;
    for (std::size_t i = from; i < to; ++i)
        out.emplace_back(ls[i]);
    return out;
}

std::string tuple_str(const std::vector<Label>& xs, const std::vector<Label>& ys)
{
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + xs[i].str();
    s += ";";
    for (std::size_t i = 0; i < ys.size(); ++i)
        s += (i ? "," : "") + ys[i].str();
    return s + ")";
}

}  // namespace

GradedVector Cochain::eval(const std::vector<GradedVector>& xs, const std::vector<GradedVector>& ys) const
{
    GradedVector out;
    std::vector<Label> lx, ly;
    expand(*this, xs, ys, 0, lx, ly, 1, out);
    return out;
}

Cochain zero_cochain(int p, int q)
{
    return {p, q, nullptr};
}

Cochain operator+(const Cochain& a, const Cochain& b)
{
    if (a.p != b.p || a.q != b.q)
        throw std::invalid_argument("adding cochains of different bidegree");
    if (!a.fn)
        return b;
    if (!b.fn)
        return a;
    return {a.p, a.q, [a, b](const std::vector<Label>& xs, const std::vector<Label>& ys) {
                return a.fn(xs, ys) + b.fn(xs, ys);
            }};
}

Cochain operator*(const Rational& c, const Cochain& a)
{
    if (!a.fn)
        return a;
    return {a.p, a.q, [a, c](const std::vector<Label>& xs, const std::vector<Label>& ys) { return c * a.fn(xs, ys); }};
}

std::string CochainKey::str() const
{
    return tuple_str(xs, ys) + "->" + out.str();
}

Cochain basis_cochain(const CochainKey& k)
{
    return {k.p, k.q, [k](const std::vector<Label>& xs, const std::vector<Label>& ys) {
                return xs == k.xs && ys == k.ys ? GradedVector(k.out) : GradedVector();
            }};
}

std::vector<std::pair<std::vector<Label>, std::vector<Label>>> argument_tuples(const AlgebraTable& a, int p, int q)
{
    std::vector<std::pair<std::vector<Label>, std::vector<Label>>> out;
    if (p < 0 || q < 0)
        return out;
    const auto ev = a.even_basis();
    auto od = a.odd_basis();
    std::sort(od.begin(), od.end());
    if ((p > 0 && ev.empty()) || static_cast<std::size_t>(q) > od.size())
        return out;
    std::vector<std::size_t> xi(p, 0);
    std::vector<std::vector<Label>> ycombos;
    std::vector<bool> pick(od.size(), false);
    std::fill(pick.begin(), pick.begin() + q, true);
    do {
        std::vector<Label> ys;
        for (std::size_t i = 0; i < od.size(); ++i)
            if (pick[i])
                ys.push_back(od[i]);
        ycombos.push_back(ys);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    while (true) {
        std::vector<Label> xs;
        for (auto i : xi)
            xs.push_back(ev[i]);
        for (const auto& ys : ycombos)
            out.push_back({xs, ys});
        int k = p - 1;
        while (k >= 0 && xi[k] + 1 == ev.size())
            xi[k--] = 0;
        if (k < 0)
            break;
        ++xi[k];
    }
    return out;
}

std::vector<CochainKey> cochain_basis(const AntiModule& m, int p, int q)
{
    std::vector<CochainKey> out;
    const auto outs = m.basis();
    for (const auto& [xs, ys] : argument_tuples(m.algebra, p, q))
        for (const auto& b : outs)
            out.push_back({p, q, xs, ys, b});
    return out;
}

std::vector<CochainKey> cochain_basis(const AntiModule& m, int k)
{
    std::vector<CochainKey> out;
    for (int p = k; p >= 0; --p) {
        auto b = cochain_basis(m, p, k - p);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

std::size_t cochain_dim(const AntiModule& m, int p, int q)
{
    std::size_t d0 = m.algebra.even_basis().size(), d1 = m.algebra.odd_basis().size();
    std::size_t r = m.dim();
    for (int i = 0; i < p; ++i)
        r *= d0;
    if (static_cast<std::size_t>(q) > d1)
        return 0;
    std::size_t binom = 1;
    for (int i = 0; i < q; ++i)
        binom = binom * (d1 - i) / (i + 1);
    return r * binom;
}

int cochain_parity(const CochainKey& k, const AntiModule& m, CochainParityRule rule)
{
    int base = parity_add(k.q, m.parity(k.out));
    return rule == CochainParityRule::q_plus_output ? base : parity_add(base, k.p);
}

// ---------------------------------------------------------------- coboundary components

namespace {

// m(x, b) for x even: rho/2 on V, rho on W
GradedVector m_left(const AntiModule& m, const Label& x, const GradedVector& v)
{
    GradedVector out;
    for (const auto& [b, c] : v.terms())
        out.add(m.rho(x, b), m.parity(b) ? c : c * half());
    return out;
}

}  // namespace

Cochain delta10(const Cochain& phi, const AntiModule& m, const DeltaOptions& o)
{
    const int p = phi.p, q = phi.q;
    if (!phi.fn)
        return zero_cochain(p + 1, q);
    return {p + 1, q, [phi, m, o, p, q](const std::vector<Label>& xs, const std::vector<Label>& ys) {
                const AlgebraTable& a = m.algebra;
                const auto ysv = singletons(ys, 0, ys.size());
                GradedVector out = m_left(m, xs[0], phi(std::vector<Label>(xs.begin() + 1, xs.end()), ys));
                for (int i = 1; i <= p; ++i) {
                    auto args = singletons(xs, 0, i - 1);
                    args.push_back(half() * a.product(xs[i - 1], xs[i]));
                    auto tail = singletons(xs, i + 1, xs.size());
                    args.insert(args.end(), tail.begin(), tail.end());
                    out.add(phi.eval(args, ysv), sign_pow(i));
                }
                const std::vector<Label> head(xs.begin(), xs.begin() + p);
                if (q == 0) {
                    for (const auto& [b, c] : terms_of(phi(head, {}))) {
                        Rational r = m.parity(b) ? Rational(o.printed ? 0 : 1) : half();
                        out.add(m.rho(xs[p], b), Rational(sign_pow(p + 1)) * r * c);
                    }
                }
                else {
                    Rational w = o.drop_q_weight ? Rational(1) : Rational(1, q);
                    const auto hv = singletons(head, 0, head.size());
                    for (int j = 1; j <= q; ++j) {
                        std::vector<GradedVector> yargs{a.product(xs[p], ys[j - 1])};
                        for (int k = 0; k < q; ++k)
                            if (k != j - 1)
                                yargs.emplace_back(ys[k]);
                        out.add(phi.eval(hv, yargs), w * Rational(sign_pow(p + j)));
                    }
                }
                return out;
            }};
}

Cochain delta01(const Cochain& phi, const AntiModule& m, const DeltaOptions& o)
{
    const int p = phi.p, q = phi.q;
    if (!phi.fn || (!o.printed && p == 0 && q == 0))
        return zero_cochain(p, q + 1);
    return {p, q + 1, [phi, m, o, p, q](const std::vector<Label>& xs, const std::vector<Label>& ys) {
                GradedVector out;
                for (int j = 1; j <= q + 1; ++j) {
                    std::vector<Label> rest;
                    for (int k = 0; k <= q; ++k)
                        if (k != j - 1)
                            rest.push_back(ys[k]);
                    for (const auto& [b, c] : terms_of(phi(xs, rest))) {
                        const int pb = m.parity(b);
                        const int sector = parity_add(q, pb);
                        Rational coef;
                        if (pb == 0)
                            coef = o.printed || sector == 0 ? 1 : -1;
                        else if (p == 0)
                            coef = o.printed || sector == 0 ? Rational(-2, q + 1) : Rational(0);
                        else
                            coef = Rational(-1, q + 1);
                        if (!coef.is_zero())
                            out.add(m.rho(ys[j - 1], b), Rational(sign_pow(p + j)) * coef * c);
                    }
                }
                return out;
            }};
}

Cochain delta_m12(const Cochain& phi, const AntiModule& m, const DeltaOptions&)
{
    const int p = phi.p, q = phi.q;
    if (p < 1)
        throw std::invalid_argument("delta_{-1,2} needs p >= 1");
    if (!phi.fn)
        return zero_cochain(p - 1, q + 2);
    return {p - 1, q + 2, [phi, m, p, q](const std::vector<Label>& xs, const std::vector<Label>& ys) {
                GradedVector out;
                for (int i = 1; i <= q + 2; ++i)
                    for (int j = i + 1; j <= q + 2; ++j) {
                        auto args = singletons(xs, 0, xs.size());
                        args.push_back(m.algebra.product(ys[i - 1], ys[j - 1]));
                        std::vector<GradedVector> rest;
                        for (int k = 0; k < q + 2; ++k)
                            if (k != i - 1 && k != j - 1)
                                rest.emplace_back(ys[k]);
                        out.add(phi.eval(args, rest), sign_pow(p + i + j + 1));
                    }
                return out;
            }};
}

TotalCochain coboundary(const TotalCochain& phi, const AntiModule& m, const DeltaOptions& o)
{
    TotalCochain out;
    auto put = [&](const Cochain& c) {
        auto it = out.find(c.p);
        if (it == out.end())
            out.emplace(c.p, c);
        else
            it->second = it->second + c;
    };
    for (const auto& [p, c] : phi) {
        put(delta10(c, m, o));
        put(delta01(c, m, o));
        if (p >= 1)
            put(delta_m12(c, m, o));
    }
    return out;
}

TotalCochain total_from_vector(const AntiModule& m, int k, const RatVector& v)
{
    const auto basis = cochain_basis(m, k);
    if (v.size() != basis.size())
        throw std::invalid_argument("coordinate vector has the wrong length");
    using Table = std::map<std::pair<std::vector<Label>, std::vector<Label>>, GradedVector>;
    std::map<int, Table> tables;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!v[i].is_zero())
            tables[basis[i].p][{basis[i].xs, basis[i].ys}].add(basis[i].out, v[i]);
    TotalCochain out;
    for (auto& [p, t] : tables) {
        auto shared = std::make_shared<Table>(std::move(t));
        out[p] = Cochain{p, k - p, [shared](const std::vector<Label>& xs, const std::vector<Label>& ys) {
                             auto it = shared->find({xs, ys});
                             return it == shared->end() ? GradedVector() : it->second;
                         }};
    }
    return out;
}

RatMatrix delta_matrix(const AntiModule& m, int k, const DeltaOptions& o)
{
    const auto src = cochain_basis(m, k);
    const auto dst = cochain_basis(m, k + 1);
    std::map<std::tuple<int, std::vector<Label>, std::vector<Label>, Label>, std::size_t> row;
    for (std::size_t i = 0; i < dst.size(); ++i)
        row[{dst[i].p, dst[i].xs, dst[i].ys, dst[i].out}] = i;
    std::map<int, std::vector<std::pair<std::vector<Label>, std::vector<Label>>>> tuples;
    for (int p = 0; p <= k + 1; ++p)
        tuples[p] = argument_tuples(m.algebra, p, k + 1 - p);
    RatMatrix d(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        TotalCochain img = coboundary({{src[j].p, basis_cochain(src[j])}}, m, o);
        for (const auto& [p, c] : img) {
            if (!c.fn)
                continue;
            for (const auto& [xs, ys] : tuples[p])
                for (const auto& [b, v] : terms_of(c.fn(xs, ys))) {
                    auto it = row.find({p, xs, ys, b});
                    if (it == row.end())
                        throw std::out_of_range("coboundary leaves the module basis at " + b.str());
                    d.set(it->second, j, v);
                }
        }
    }
    return d;
}

namespace {

void evaluate_into(Report& r, const Cochain& c, const AlgebraTable& a, const char* id, const std::string& who)
{
    if (!c.fn) {
        r.evaluations += argument_tuples(a, c.p, c.q).size();
        return;
    }
    for (const auto& [xs, ys] : argument_tuples(a, c.p, c.q)) {
        ++r.evaluations;
        GradedVector v = c.fn(xs, ys);
        if (!v.is_zero()) {
            std::vector<std::string> w;
            if (!who.empty())
                w.push_back(who);
            w.push_back(tuple_str(xs, ys));
            r.violations.push_back({id, w, v, ""});
        }
    }
}

std::string window_of(const AlgebraTable& a)
{
    return a.window() ? a.window()->str() : "full";
}

}  // namespace

Report cochain_report(const TotalCochain& phi, const AntiModule& m, const char* id, const std::string& subject)
{
    Report r;
    r.subject = subject;
    r.window = window_of(m.algebra);
    r.checked = {id};
    for (const auto& [p, c] : phi)
        evaluate_into(r, c, m.algebra, id, "");
    return r;
}

Report verify_d2(const AntiModule& m, int k_max, const DeltaOptions& o)
{
    Report r;
    r.subject = m.algebra.name() + " with " + m.name;
    r.window = window_of(m.algebra);
    r.checked = {identity::d2};
    for (int k = 0; k <= k_max; ++k)
        for (const auto& key : cochain_basis(m, k)) {
            TotalCochain dd = coboundary(coboundary({{key.p, basis_cochain(key)}}, m, o), m, o);
            for (const auto& [p, c] : dd)
                evaluate_into(r, c, m.algebra, identity::d2, key.str());
        }
    return r;
}

Report bicomplex_check(const AntiModule& m, int k_max)
{
    for (const auto& a : m.algebra.basis())
        for (const auto& b : m.basis())
            if (!m.rho(a, b).is_zero())
                throw std::invalid_argument("bicomplex_check needs trivial coefficients");
    Report r;
    r.subject = m.algebra.name() + " with " + m.name;
    r.window = window_of(m.algebra);
    r.checked = {identity::d10_sq, identity::dm12_sq, identity::d10_dm12, identity::d01_zero};
    const auto& a = m.algebra;
    for (int k = 0; k <= k_max; ++k)
        for (const auto& key : cochain_basis(m, k)) {
            Cochain e = basis_cochain(key);
            const std::string w = key.str();
            evaluate_into(r, delta10(delta10(e, m), m), a, identity::d10_sq, w);
            evaluate_into(r, delta01(e, m), a, identity::d01_zero, w);
            if (key.p >= 2)
                evaluate_into(r, delta_m12(delta_m12(e, m), m), a, identity::dm12_sq, w);
            Cochain mixed = delta_m12(delta10(e, m), m);
            if (key.p >= 1)
                mixed = mixed + delta10(delta_m12(e, m), m);
            evaluate_into(r, mixed, a, identity::d10_dm12, w);
        }
    return r;
}

Report bicomplex_check(const AlgebraTable& a, int k_max)
{
    return bicomplex_check(trivial_module(a), k_max);
}

bool preserves_parity(const AntiModule& m, int k_max, CochainParityRule rule, const DeltaOptions& o)
{
    for (int k = 0; k <= k_max; ++k) {
        const auto src = cochain_basis(m, k), dst = cochain_basis(m, k + 1);
        RatMatrix d = delta_matrix(m, k, o);
        for (const auto& [rc, v] : d.entries())
            if (cochain_parity(dst[rc.first], m, rule) != cochain_parity(src[rc.second], m, rule))
                return false;
    }
    return true;
}

CochainParityRule calibrate_cochain_parity(const AntiModule& m, int k_max)
{
    for (auto rule : {CochainParityRule::q_plus_output, CochainParityRule::pq_plus_output})
        if (preserves_parity(m, k_max, rule))
            return rule;
    throw std::logic_error("no cochain parity rule is preserved by the coboundary");
}

namespace {

RatMatrix columns_of(const RatMatrix& m, const std::vector<std::size_t>& cols)
{
    std::vector<RatVector> cs;
    for (auto j : cols)
        cs.push_back(m.column(j));
    return RatMatrix::from_columns(cs, m.rows());
}

std::vector<std::size_t> sector_columns(const AntiModule& m, const std::vector<CochainKey>& basis, int parity)
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (cochain_parity(basis[j], m) == parity)
            out.push_back(j);
    return out;
}

void require_preserved(const AntiModule& m, int k, const RatMatrix& d)
{
    const auto src = cochain_basis(m, k), dst = cochain_basis(m, k + 1);
    for (const auto& [rc, v] : d.entries())
        if (cochain_parity(dst[rc.first], m) != cochain_parity(src[rc.second], m))
            throw std::logic_error("coboundary mixes cochain parities at " + src[rc.second].str());
}

}  // namespace

CohomologyDims cohomology_dims(const AntiModule& m, int k, const DeltaOptions& o)
{
    if (m.algebra.is_family())
        throw std::invalid_argument("cohomology_dims needs a finite algebra");
    const auto src = cochain_basis(m, k);
    RatMatrix dk = delta_matrix(m, k, o);
    require_preserved(m, k, dk);
    std::optional<RatMatrix> dprev;
    std::vector<CochainKey> prev;
    if (k > 0) {
        prev = cochain_basis(m, k - 1);
        dprev = delta_matrix(m, k - 1, o);
        require_preserved(m, k - 1, *dprev);
    }
    CohomologyDims out;
    for (int s : {0, 1}) {
        auto cols = sector_columns(m, src, s);
        long dim_ker = static_cast<long>(cols.size()) - static_cast<long>(rank(columns_of(dk, cols)));
        long dim_im = dprev ? static_cast<long>(rank(columns_of(*dprev, sector_columns(m, prev, s)))) : 0;
        (s ? out.odd : out.even) = dim_ker - dim_im;
    }
    return out;
}

std::vector<RatVector> cocycle_basis(const AntiModule& m, int k, int parity, const DeltaOptions& o)
{
    const auto src = cochain_basis(m, k);
    auto cols = sector_columns(m, src, parity);
    std::vector<RatVector> out;
    for (const auto& v : kernel_basis(columns_of(delta_matrix(m, k, o), cols))) {
        RatVector full(src.size());
        for (std::size_t i = 0; i < cols.size(); ++i)
            full[cols[i]] = v[i];
        out.push_back(full);
    }
    return out;
}

// ---------------------------------------------------------------- extensions

namespace {

GradedVector value_on(const TotalCochain& c, int k, const Label& a, const AlgebraTable& alg)
{
    (void)k;
    if (alg.parity(a) == 0) {
        auto it = c.find(1);
        return it == c.end() ? GradedVector() : it->second({a}, {});
    }
    auto it = c.find(0);
    return it == c.end() ? GradedVector() : it->second({}, {a});
}

}  // namespace

ModuleExtension extend_module(const AntiModule& m, const TotalCochain& c, const DeltaOptions& o)
{
    for (const auto& [p, part] : c)
        if (p + part.q != 1)
            throw std::invalid_argument("extend_module needs a 1-cochain");
    ModuleExtension out;
    AntiModule e = m;
    const Label lam("lam");
    e.name = m.name + "+K";
    e.even_basis.push_back(lam);
    if (m.parity_rule) {
        auto rule = m.parity_rule;
        e.parity_rule = [rule, lam](const Label& b) -> std::optional<int> {
            if (b == lam)
                return 0;
            return rule(b);
        };
    }
    auto rho = m.rho;
    AlgebraTable alg = m.algebra;
    e.rho = [rho, c, lam, alg](const Label& a, const Label& b) {
        return b == lam ? value_on(c, 1, a, alg) : rho(a, b);
    };
    out.module = e;
    out.module_check = check_module(e);
    out.cocycle = cochain_report(coboundary(c, m, o), m, identity::cocycle, "delta c");
    if (!m.algebra.is_family()) {
        const auto unknowns = m.even_basis;
        std::map<std::pair<Label, Label>, std::size_t> row;
        std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
        std::map<std::size_t, Rational> rhs;
        auto row_of = [&](const Label& a, const Label& b) { return row.try_emplace({a, b}, row.size()).first->second; };
        for (const auto& a : m.algebra.basis()) {
            for (std::size_t j = 0; j < unknowns.size(); ++j)
                for (const auto& [b, v] : terms_of(m.rho(a, unknowns[j])))
                    entries.push_back({row_of(a, b), j, v});
            for (const auto& [b, v] : terms_of(value_on(c, 1, a, m.algebra)))
                rhs[row_of(a, b)] = v;
        }
        RatMatrix sys(row.size(), unknowns.size());
        for (const auto& [i, j, v] : entries)
            sys.add(i, j, v);
        RatVector b(row.size());
        for (const auto& [i, v] : rhs)
            b[i] = v;
        if (auto sol = solve(sys, b)) {
            GradedVector v;
            for (std::size_t j = 0; j < unknowns.size(); ++j)
                v.add(unknowns[j], (*sol)[j]);
            out.splitting = v;
        }
    }
    return out;
}

namespace {

void require_trivial(const AntiModule& b)
{
    if (b.algebra.is_family())
        throw std::invalid_argument("extensions need a finite algebra");
    for (const auto& x : b.algebra.basis())
        for (const auto& t : b.basis()) {
            if (!b.rho(x, t).is_zero())
                throw std::invalid_argument("extension_algebra needs a trivial module");
            if (b.algebra.contains(t))
                throw std::invalid_argument("module label " + t.str() + " clashes with the algebra");
        }
}

GradedVector omega_of(const TotalCochain& w, const AlgebraTable& a, const Label& x, const Label& y)
{
    auto part = [&](int p) -> const Cochain* {
        auto it = w.find(p);
        return it == w.end() ? nullptr : &it->second;
    };
    const int px = a.parity(x), py = a.parity(y);
    if (!px && !py)
        return part(2) ? Rational(2) * (*part(2))({x, y}, {}) : GradedVector();
    if (!px && py)
        return part(1) ? (*part(1))({x}, {y}) : GradedVector();
    if (px && !py)
        return part(1) ? (*part(1))({y}, {x}) : GradedVector();
    return part(0) ? (*part(0))({}, {x, y}) : GradedVector();
}

}  // namespace

AlgebraTable extension_algebra(const AntiModule& b, const TotalCochain& omega)
{
    require_trivial(b);
    const AlgebraTable& a = b.algebra;
    auto even = a.even_basis();
    auto odd = a.odd_basis();
    even.insert(even.end(), b.even_basis.begin(), b.even_basis.end());
    odd.insert(odd.end(), b.odd_basis.begin(), b.odd_basis.end());
    AlgebraTable::Table t;
    for (const auto& x : a.basis())
        for (const auto& y : a.basis()) {
            GradedVector v = a.product(x, y) + omega_of(omega, a, x, y);
            if (!v.is_zero())
                t[{x, y}] = v;
        }
    return AlgebraTable::finite(a.name() + " x_w " + b.name, AlgebraKind::antialgebra, even, odd, t, false);
}

std::optional<std::map<Label, GradedVector>> extension_splitting(const AntiModule& b, const TotalCochain& omega)
{
    require_trivial(b);
    const AlgebraTable& a = b.algebra;
    // unknown (z, t): coefficient of t in eta(z), parity-preserving
    std::vector<std::pair<Label, Label>> unknowns;
    for (const auto& z : a.basis())
        for (const auto& t : b.basis())
            if (a.parity(z) == b.parity(t))
                unknowns.push_back({z, t});
    std::map<std::pair<Label, Label>, std::size_t> uidx;
    for (std::size_t i = 0; i < unknowns.size(); ++i)
        uidx[unknowns[i]] = i;
    std::map<std::tuple<Label, Label, Label>, std::size_t> row;
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
    std::map<std::size_t, Rational> rhs;
    auto row_of = [&](const Label& x, const Label& y, const Label& t) {
        return row.try_emplace({x, y, t}, row.size()).first->second;
    };
    for (const auto& x : a.basis())
        for (const auto& y : a.basis()) {
            GradedVector xy = a.product(x, y);
            for (const auto& t : b.basis()) {
                std::size_t r = row_of(x, y, t);
                for (const auto& [z, c] : xy.terms()) {
                    auto it = uidx.find({z, t});
                    if (it != uidx.end())
                        entries.push_back({r, it->second, c});
                }
            }
            for (const auto& [t, c] : terms_of(omega_of(omega, a, x, y)))
                rhs[row_of(x, y, t)] = -c;
        }
    RatMatrix sys(row.size(), unknowns.size());
    for (const auto& [i, j, v] : entries)
        sys.add(i, j, v);
    RatVector rv(row.size());
    for (const auto& [i, v] : rhs)
        rv[i] = v;
    auto sol = solve(sys, rv);
    if (!sol)
        return std::nullopt;
    std::map<Label, GradedVector> eta;
    for (const auto& z : a.basis())
        eta[z] = GradedVector();
    for (std::size_t i = 0; i < unknowns.size(); ++i)
        eta[unknowns[i].first].add(unknowns[i].second, (*sol)[i]);
    return eta;
}

// ---------------------------------------------------------------- gamma

TotalCochain gamma_cochain(const Rational& sign)
{
    TotalCochain g;
    g[1] = Cochain{1, 0, [](const std::vector<Label>& xs, const std::vector<Label>&) {
                       const Label& x = xs[0];
                       if (x.family != "e")
                           return GradedVector();
                       return GradedVector(Label("e*", -x.idx()), -x.idx());
                   }};
    g[0] = Cochain{0, 1, [sign](const std::vector<Label>&, const std::vector<Label>& ys) {
                       const Label& y = ys[0];
                       if (y.family != "l")
                           return GradedVector();
                       const Rational& i = y.idx();
                       return GradedVector(Label("l*", -i), sign * (i * i - Rational(1, 4)));
                   }};
    return g;
}

GammaResult verify_gamma(long window, const DeltaOptions& o)
{
    GammaResult res;
    res.window = window;
    const AlgebraTable a = build_AK1(window);
    const AntiModule m = coadjoint_module(a, CoadjointConvention::twisted);
    Rational used = 1;
    for (int s : {1, -1}) {
        used = s;
        res.cocycle = cochain_report(coboundary(gamma_cochain(s), m, o), m, identity::cocycle, "delta gamma");
        if (res.cocycle.passed()) {
            res.pairing_sign = s;
            break;
        }
    }
    // delta c = gamma for c in the even window part of the module
    const TotalCochain g = gamma_cochain(used);
    const auto unknowns = m.even_basis;
    std::map<std::pair<std::string, Label>, std::size_t> row;
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
    std::map<std::size_t, Rational> rhs;
    auto row_of = [&](const std::string& t, const Label& b) { return row.try_emplace({t, b}, row.size()).first->second; };
    std::vector<TotalCochain> images;
    for (const auto& u : unknowns)
        images.push_back(coboundary({{0, basis_cochain({0, 0, {}, {}, u})}}, m, o));
    for (int p : {1, 0})
        for (const auto& [xs, ys] : argument_tuples(a, p, 1 - p)) {
            const std::string t = tuple_str(xs, ys);
            for (std::size_t j = 0; j < images.size(); ++j) {
                auto it = images[j].find(p);
                if (it != images[j].end() && it->second.fn)
                    for (const auto& [b, v] : terms_of(it->second.fn(xs, ys)))
                        entries.push_back({row_of(t, b), j, v});
            }
            for (const auto& [b, v] : terms_of(g.at(p)(xs, ys)))
                rhs[row_of(t, b)] = v;
        }
    RatMatrix sys(row.size(), unknowns.size());
    for (const auto& [i, j, v] : entries)
        sys.add(i, j, v);
    RatVector rv(row.size());
    for (const auto& [i, v] : rhs)
        rv[i] = v;
    res.unknowns = unknowns.size();
    res.equations = row.size();
    res.coboundary_found = solve(sys, rv).has_value();
    return res;
}

}  // namespace antialg
