#include "antialg/matrix.hpp"
#include "antialg/rational.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace antialg;

namespace {

// Leibniz expansion over all permutations; only used on tiny matrices.
Rational det_oracle(const std::vector<std::vector<Rational>>& a)
{
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        Rational term = sign_pow(inversions);
        for (std::size_t i = 0; i < n; ++i)
            term *= a[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Largest k with a nonzero k x k minor.
std::size_t rank_oracle(const RatMatrix& m)
{
    const auto d = m.to_dense();
    std::size_t best = 0;
    const std::size_t r = m.rows(), c = m.cols();
    for (std::size_t rmask = 1; rmask < (1u << r); ++rmask)
        for (std::size_t cmask = 1; cmask < (1u << c); ++cmask) {
            if (__builtin_popcount(rmask) != __builtin_popcount(cmask))
                continue;
            std::size_t k = __builtin_popcount(rmask);
            if (k <= best)
                continue;
            std::vector<std::vector<Rational>> sub;
            for (std::size_t i = 0; i < r; ++i) {
                if (!(rmask >> i & 1))
                    continue;
                sub.emplace_back();
                for (std::size_t j = 0; j < c; ++j)
                    if (cmask >> j & 1)
                        sub.back().push_back(d[i][j]);
            }
            if (!det_oracle(sub).is_zero())
                best = k;
        }
    return best;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c)
{
    std::uniform_int_distribution<int> val(-3, 3), den(1, 3), zero(0, 2);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (zero(rng) != 0)
                m.set(i, j, Rational(val(rng), den(rng)));
    return m;
}

}  // namespace

TEST(Rational, CanonicalForm)
{
    Rational a(6, -4);
    EXPECT_EQ(a.numerator(), -3);
    EXPECT_EQ(a.denominator(), 2);
    EXPECT_EQ(Rational(0, 5).denominator(), 1);
    EXPECT_EQ(a.str(), "-3/2");
    EXPECT_EQ(Rational::parse(" -7/2 "), Rational(-7, 2));
    EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, SumTwoWays)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> n(-50, 50), d(1, 40);
    for (int t = 0; t < 500; ++t) {
        long a = n(rng), b = d(rng), c = n(rng), e = d(rng);
        Rational direct = Rational(a, b) + Rational(c, e);
        Rational cross(a * e + c * b, b * e);
        EXPECT_EQ(direct, cross);
        EXPECT_EQ(direct.str(), cross.str());
        EXPECT_EQ(std::gcd(std::abs(direct.numerator().get_si()), direct.denominator().get_si()), 1);
    }
}

TEST(Matrix, SparseStorage)
{
    RatMatrix m(2, 2);
    m.set(0, 1, 3);
    m.add(0, 1, -3);
    EXPECT_TRUE(m.is_zero());
    EXPECT_THROW(m.set(2, 0, 1), std::out_of_range);
}

TEST(Matrix, RankExample)
{
    EXPECT_EQ(rank(RatMatrix::from_rows({{1, 2}, {2, 4}})), 1u);
}

TEST(Matrix, KernelExample)
{
    auto k = kernel_basis(RatMatrix::from_rows({{1, 1}}));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0][0], -k[0][1]);
    EXPECT_FALSE(k[0][0].is_zero());
}

TEST(Matrix, SolveExample)
{
    auto x = solve(RatMatrix::from_rows({{1, 1}}), {3});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0] + (*x)[1], 3);
    EXPECT_FALSE(solve(RatMatrix::from_rows({{1, 1}, {1, 1}}), {1, 2}).has_value());
    EXPECT_THROW(solve(RatMatrix::from_rows({{1, 1}}), {1, 2}), std::invalid_argument);
}

TEST(Matrix, RankMatchesMinorOracle)
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
        RatMatrix m = random_matrix(rng, r, c);
        ASSERT_EQ(rank(m), rank_oracle(m)) << m.str();
        EXPECT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(Matrix, RankNullity)
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        RatMatrix m = random_matrix(rng, 1 + t % 6, 1 + (t * 7) % 7);
        auto k = kernel_basis(m);
        EXPECT_EQ(rank(m) + k.size(), m.cols());
        for (const auto& v : k)
            EXPECT_TRUE(is_zero_vector(m.apply(v)));
        if (!k.empty())
            EXPECT_EQ(rank(RatMatrix::from_rows(k, m.cols())), k.size());
    }
}

TEST(Matrix, SolveResidual)
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int t = 0; t < 100; ++t) {
        RatMatrix m = random_matrix(rng, 1 + t % 5, 1 + (t * 3) % 5);
        RatVector b(m.rows());
        for (auto& x : b)
            x = val(rng);
        auto x = solve(m, b);
        auto rows = m.to_dense();
        for (std::size_t i = 0; i < rows.size(); ++i)
            rows[i].push_back(b[i]);
        const bool consistent = rank(RatMatrix::from_rows(rows, m.cols() + 1)) == rank(m);
        EXPECT_EQ(x.has_value(), consistent);
        if (x)
            EXPECT_EQ(m.apply(*x), b);
    }
}

TEST(Matrix, ProductAssociates)
{
    std::mt19937_64 rng(14);
    for (int t = 0; t < 30; ++t) {
        RatMatrix a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2), c = random_matrix(rng, 2, 3);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
    }
}

TEST(Matrix, RrefIsDeterministic)
{
    RatMatrix m = RatMatrix::from_rows({{0, 2, 4}, {1, 1, 1}, {2, 4, 6}});
    Echelon e1 = rref(m), e2 = rref(m);
    EXPECT_EQ(e1.rows, e2.rows);
    EXPECT_EQ(e1.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Quotient, SectionAndRelations)
{
    std::mt19937_64 rng(15);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + t % 5;
        RatMatrix rel = random_matrix(rng, t % 4, n);
        std::vector<RatVector> rows = rel.to_dense();
        QuotientSpace q = quotient(n, rows);
        EXPECT_EQ(q.dim(), n - rank(RatMatrix::from_rows(rows, n)));
        EXPECT_EQ(q.projection * q.section, RatMatrix::identity(q.dim()));
        for (const auto& r : rows)
            EXPECT_TRUE(is_zero_vector(q.project(r)));
    }
}
