#include "antialg/axioms.hpp"
#include "antialg/catalog.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace antialg;

namespace {

// The five identities written out directly on structure constants of a small table.
bool oracle_antialgebra(const AlgebraTable& a)
{
    auto P = [&](const GradedVector& u, const GradedVector& v) { return a.product(u, v); };
    for (const auto& x : a.basis())
        for (const auto& y : a.basis()) {
            const GradedVector X(x), Y(y);
            if (P(X, Y) != Rational(sign_pow(a.parity(x) * a.parity(y))) * P(Y, X))
                return false;
            for (const auto& z : a.basis()) {
                const GradedVector Z(z);
                const int px = a.parity(x), py = a.parity(y), pz = a.parity(z);
                if (!px && !py && !pz && P(X, P(Y, Z)) != P(P(X, Y), Z))
                    return false;
                if (!px && !py && pz && P(X, P(Y, Z)) != half() * P(P(X, Y), Z))
                    return false;
                if (!px && py && pz && P(X, P(Y, Z)) != P(P(X, Y), Z) + P(Y, P(X, Z)))
                    return false;
                if (px && py && pz && !(P(X, P(Y, Z)) + P(Y, P(Z, X)) + P(Z, P(X, Y))).is_zero())
                    return false;
            }
        }
    return true;
}

// Random 1|2 tables in the asl2/ah1 shape: ]e,e[ = s e, ]e,a[ = u b + v a, ]e,b[ = w a + t b, ]a,b[ = r e.
AlgebraTable random_small(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(0, 4);
    const Rational vals[] = {0, 1, -1, half(), 2};
    const Label eps("eps"), a("a"), b("b");
    auto r = [&] { return vals[pick(rng)]; };
    AlgebraTable::Table t;
    auto put = [&](const Label& x, const Label& y, GradedVector v) {
        if (!v.is_zero())
            t[{x, y}] = v;
    };
    put(eps, eps, GradedVector(eps, r()));
    put(eps, a, GradedVector(a, r()) + GradedVector(b, r()));
    put(eps, b, GradedVector(a, r()) + GradedVector(b, r()));
    put(a, b, GradedVector(eps, r()));
    put(a, a, GradedVector(eps, r()));
    return AlgebraTable::finite("random", AlgebraKind::antialgebra, {eps}, {a, b}, t);
}

}  // namespace

TEST(Axioms, CatalogPasses)
{
    for (const auto& a : {build_asl2(), build_ah1(0), build_ah1(1), build_ah1(-2)}) {
        const Report r = check_antialgebra(a);
        EXPECT_TRUE(r.passed()) << a.name();
        EXPECT_EQ(r.checked.size(), 5u);
    }
}

TEST(Axioms, AgreesWithDirectOracleOnRandomTables)
{
    std::mt19937_64 rng(21);
    int passing = 0;
    for (int t = 0; t < 400; ++t) {
        const AlgebraTable a = random_small(rng);
        const bool mine = check_antialgebra(a).passed();
        EXPECT_EQ(mine, oracle_antialgebra(a)) << t;
        passing += mine;
    }
    EXPECT_GT(passing, 0);
}

TEST(Axioms, WitnessDefectRecomputes)
{
    for (const auto& m : catalog_mutations()) {
        const Report r = check_antialgebra(m.algebra);
        for (const auto& v : r.violations) {
            ASSERT_FALSE(v.witness.empty());
            EXPECT_FALSE(v.defect.is_zero());
            if (v.identity == "Jack") {
                const GradedVector y1(Label::parse(v.witness[0])), y2(Label::parse(v.witness[1])),
                    y3(Label::parse(v.witness[2]));
                auto P = [&](const GradedVector& u, const GradedVector& w) { return m.algebra.product(u, w); };
                EXPECT_EQ(v.defect, P(y1, P(y2, y3)) + P(y2, P(y3, y1)) + P(y3, P(y1, y2)));
            }
        }
    }
}

TEST(Axioms, SuperalgebraChecks)
{
    EXPECT_TRUE(check_superalgebra(build_osp12()).passed());
    EXPECT_TRUE(check_superalgebra(build_K1(4)).passed());
    // an antialgebra is not a Lie superalgebra
    EXPECT_FALSE(check_superalgebra(build_asl2().renamed("as-super")).passed());
}

TEST(Axioms, FamilyCheckCountsInteriorTriples)
{
    const Report r = check_antialgebra(build_AK1(6));
    EXPECT_TRUE(r.passed());
    // 13 even and 12 odd labels
    const std::size_t ev = 13, od = 12;
    EXPECT_EQ(r.evaluations, (ev + od) * (ev + od) + ev * ev * ev + ev * ev * od + ev * od * od + od * od * od);
}
