#include "antialg/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace antialg {

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.entries_.emplace(Index{i, i}, Rational(1));
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols)
{
    if (!rows.empty())
        cols = rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < cols; ++j)
            if (!rows[i][j].is_zero())
                m.entries_.emplace(Index{i, j}, rows[i][j]);
    }
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols, std::size_t rows)
{
    return from_rows(cols, rows).transpose();
}

Rational RatMatrix::at(std::size_t i, std::size_t j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Rational(0) : it->second;
}

void RatMatrix::set(std::size_t i, std::size_t j, const Rational& v)
{
    if (i >= rows_ || j >= cols_)
        throw std::out_of_range("matrix index");
    if (v.is_zero())
        entries_.erase({i, j});
    else
        entries_[{i, j}] = v;
}

void RatMatrix::add(std::size_t i, std::size_t j, const Rational& v)
{
    if (v.is_zero())
        return;
    if (i >= rows_ || j >= cols_)
        throw std::out_of_range("matrix index");
    auto [it, inserted] = entries_.try_emplace({i, j}, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero())
            entries_.erase(it);
    }
}

RatVector RatMatrix::row(std::size_t i) const
{
    RatVector r(cols_);
    for (auto it = entries_.lower_bound({i, 0}); it != entries_.end() && it->first.first == i; ++it)
        r[it->first.second] = it->second;
    return r;
}

RatVector RatMatrix::column(std::size_t j) const
{
    RatVector c(rows_);
    for (const auto& [ij, v] : entries_)
        if (ij.second == j)
            c[ij.first] = v;
    return c;
}

std::vector<RatVector> RatMatrix::to_dense() const
{
    std::vector<RatVector> d(rows_, RatVector(cols_));
    for (const auto& [ij, v] : entries_)
        d[ij.first][ij.second] = v;
    return d;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (const auto& [ij, v] : entries_)
        t.entries_.emplace(Index{ij.second, ij.first}, v);
    return t;
}

RatVector RatMatrix::apply(const RatVector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector size mismatch");
    RatVector out(rows_);
    for (const auto& [ij, a] : entries_)
        if (!v[ij.second].is_zero())
            out[ij.first] += a * v[ij.second];
    return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum size mismatch");
    for (const auto& [ij, v] : o.entries_)
        add(ij.first, ij.second, v);
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference size mismatch");
    for (const auto& [ij, v] : o.entries_)
        add(ij.first, ij.second, -v);
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [ij, v] : entries_)
        v *= s;
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product size mismatch");
    // bucket b by row
    std::vector<std::vector<std::pair<std::size_t, const Rational*>>> brows(b.rows_);
    for (const auto& [ij, v] : b.entries_)
        brows[ij.first].emplace_back(ij.second, &v);
    RatMatrix c(a.rows_, b.cols_);
    for (const auto& [ij, v] : a.entries_)
        for (const auto& [k, w] : brows[ij.second])
            c.add(ij.first, k, v * *w);
    return c;
}

Rational RatMatrix::trace() const
{
    Rational t;
    for (const auto& [ij, v] : entries_)
        if (ij.first == ij.second)
            t += v;
    return t;
}

std::string RatMatrix::str() const
{
    std::ostringstream os;
    auto d = to_dense();
    for (const auto& r : d) {
        os << '[';
        for (std::size_t j = 0; j < r.size(); ++j)
            os << (j ? " " : "") << r[j];
        os << "]\n";
    }
    return os.str();
}

bool is_zero_vector(const RatVector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Echelon rref(const std::vector<RatVector>& input, std::size_t cols)
{
    std::vector<RatVector> a;
    a.reserve(input.size());
    for (const auto& r : input) {
        if (r.size() != cols)
            throw std::invalid_argument("rref: row length mismatch");
        if (!is_zero_vector(r))
            a.push_back(r);
    }
    Echelon e;
    e.cols = cols;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < a.size(); ++c) {
        std::size_t piv = lead;
        while (piv < a.size() && a[piv][c].is_zero())
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[lead], a[piv]);
        Rational inv = Rational(1) / a[lead][c];
        for (std::size_t j = c; j < cols; ++j)
            if (!a[lead][j].is_zero())
                a[lead][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == lead || a[i][c].is_zero())
                continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!a[lead][j].is_zero())
                    a[i][j] -= f * a[lead][j];
        }
        e.pivots.push_back(c);
        ++lead;
    }
    a.resize(lead);
    e.rows = std::move(a);
    return e;
}

Echelon rref(const RatMatrix& m)
{
    return rref(m.to_dense(), m.cols());
}

std::size_t rank(const RatMatrix& m)
{
    if (m.is_zero())
        return 0;
    return rref(m).pivots.size();
}

std::vector<RatVector> kernel_basis(const RatMatrix& m)
{
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r)
            v[e.pivots[r]] = -e.rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has wrong length");
    auto dense = m.to_dense();
    for (std::size_t i = 0; i < dense.size(); ++i)
        dense[i].push_back(b[i]);
    Echelon e = rref(dense, m.cols() + 1);
    RatVector x(m.cols());
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (e.pivots[r] == m.cols())
            return std::nullopt;
        x[e.pivots[r]] = e.rows[r][m.cols()];
    }
    return x;
}

QuotientSpace quotient(std::size_t ambient_dim, const std::vector<RatVector>& relations)
{
    Echelon e = rref(relations, ambient_dim);
    QuotientSpace q;
    q.ambient_dim = ambient_dim;
    q.relation_basis = e.rows;
    std::vector<long> slot(ambient_dim, -1);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (!is_pivot[j]) {
            slot[j] = static_cast<long>(q.kept.size());
            q.kept.push_back(j);
        }
    q.projection = RatMatrix(q.kept.size(), ambient_dim);
    q.section = RatMatrix(ambient_dim, q.kept.size());
    for (std::size_t i = 0; i < q.kept.size(); ++i) {
        q.projection.set(i, q.kept[i], 1);
        q.section.set(q.kept[i], i, 1);
    }
    for (std::size_t r = 0; r < e.rows.size(); ++r)
        for (std::size_t j = 0; j < ambient_dim; ++j)
            if (slot[j] >= 0 && !e.rows[r][j].is_zero())
                q.projection.set(static_cast<std::size_t>(slot[j]), e.pivots[r], -e.rows[r][j]);
    return q;
}

}  // namespace antialg
