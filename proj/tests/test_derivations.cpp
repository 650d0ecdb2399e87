#include "antialg/axioms.hpp"
#include "antialg/catalog.hpp"
#include "antialg/derivations.hpp"

#include <gtest/gtest.h>

using namespace antialg;

namespace {
const Label eps("eps"), a("a"), b("b");
}

TEST(Derivations, DiagonalScalingIsDerivation)
{
    LinearOperator d{0, [](const Label& l) -> GradedVector {
                         if (l == a)
                             return GradedVector(a);
                         if (l == b)
                             return GradedVector(b, -1);
                         return {};
                     }};
    EXPECT_TRUE(derivation_defect(d, build_asl2()).passed());
}

TEST(Derivations, AdIsNotADerivation)
{
    const AlgebraTable alg = build_asl2();
    LinearOperator ad{0, [alg](const Label& l) { return alg.product(eps, l); }};
    const Report r = derivation_defect(ad, alg);
    ASSERT_FALSE(r.passed());
    // ad_eps ]eps,eps[ = eps against 2 eps
    bool found = false;
    for (const auto& v : r.violations)
        if (v.witness == std::vector<std::string>{"eps", "eps"}) {
            found = true;
            EXPECT_EQ(v.defect, GradedVector(eps, -1));
        }
    EXPECT_TRUE(found);
}

TEST(Derivations, Asl2IsOsp12)
{
    const DerivationAlgebra d = derivation_algebra(build_asl2());
    EXPECT_EQ(d.algebra.dim_even(), 3u);
    EXPECT_EQ(d.algebra.dim_odd(), 2u);
    EXPECT_TRUE(check_superalgebra(d.algebra).passed());
    for (const auto& l : d.algebra.basis())
        EXPECT_TRUE(derivation_defect(d.op(l), build_asl2()).passed()) << l;
    const auto iso = match_osp12(d.algebra);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(check_homomorphism(build_osp12(), d.algebra, *iso).passed());
}

TEST(Derivations, OddPartIsIrreducible)
{
    const DerivationAlgebra d = derivation_algebra(build_asl2());
    const auto odd = d.algebra.odd_basis();
    ASSERT_EQ(odd.size(), 2u);
    // no even element other than multiples of the grading keeps a single odd line:
    // the span of [ev, o] over even ev and one odd o is the whole odd part
    for (const auto& o : odd) {
        std::vector<RatVector> cols;
        for (const auto& ev : d.algebra.even_basis()) {
            const GradedVector w = d.algebra.product(GradedVector(ev), GradedVector(o));
            cols.push_back({w.coeff(odd[0]), w.coeff(odd[1])});
        }
        EXPECT_EQ(rank(RatMatrix::from_columns(cols, 2)), 2u) << o;
    }
}

TEST(Derivations, CatalogDerivationAlgebrasClose)
{
    for (const auto& alg : {build_ah1(0), build_ah1(1), build_ah1(-2)}) {
        const DerivationAlgebra d = derivation_algebra(alg);
        EXPECT_TRUE(check_superalgebra(d.algebra).passed()) << alg.name();
    }
    EXPECT_THROW(derivation_algebra(build_AK1(2)), std::invalid_argument);
}

TEST(Derivations, Ah10HasFourEvenDerivations)
{
    const DerivationAlgebra d = derivation_algebra(build_ah1(0));
    EXPECT_EQ(d.algebra.dim_even(), 4u);
    EXPECT_EQ(d.algebra.dim_odd(), 2u);
}

TEST(Derivations, K1ActionValues)
{
    const LinearOperator x0 = k1_action(Label("x", 0));
    EXPECT_TRUE(x0(Label("e", 0)).is_zero());
    const LinearOperator x1 = k1_action(Label("x", 1));
    EXPECT_EQ(x1(Label("l", Rational(3, 2))), GradedVector(Label("l", Rational(5, 2))));
    const LinearOperator s = k1_action(Label("xi", half()));
    const AlgebraTable ak = build_AK1(3);
    const Label e1("e", 1), lh("l", half());
    // zero defect on (e_1, l_1/2)
    const GradedVector def = s(ak.product(e1, lh)) - ak.product(s(GradedVector(e1)), GradedVector(lh)) -
                             ak.product(GradedVector(e1), s(GradedVector(lh)));
    EXPECT_TRUE(def.is_zero());
}

TEST(Derivations, K1ActionOnAK1)
{
    const Report r = check_K1_action(5);
    EXPECT_TRUE(r.passed());
    // [x_1, x_-1] = -2 x_0 as operators on interior labels
    const auto c = super_commutator(k1_action(Label("x", 1)), k1_action(Label("x", -1)));
    const auto x0 = k1_action(Label("x", 0));
    for (long n = -3; n <= 3; ++n)
        EXPECT_EQ(c(Label("e", n)), Rational(-2) * x0(Label("e", n)));
}

TEST(Derivations, MatrixRoundTrip)
{
    const DerivationAlgebra d = derivation_algebra(build_asl2());
    for (const auto& [l, m] : d.operators)
        EXPECT_EQ(d.op(l).to_matrix(d.source_basis), m);
}
