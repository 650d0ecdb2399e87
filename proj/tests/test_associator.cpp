#include "antialg/associator.hpp"
#include "antialg/axioms.hpp"
#include "antialg/catalog.hpp"
#include "antialg/spec_io.hpp"

#include <gtest/gtest.h>

using namespace antialg;

namespace {

bool shared_witness(const Report& r, const std::string& a, const std::string& b)
{
    for (const auto& v : r.violations)
        for (const auto& w : r.violations)
            if (v.identity == a && w.identity == b && v.witness == w.witness)
                return true;
    return false;
}

const Label eps("eps"), a("a"), b("b");

}  // namespace

TEST(Associator, Asl2Values)
{
    const BilinearMap m = bracket_to_m(build_asl2());
    EXPECT_EQ(m(eps, eps), GradedVector(eps, half()));
    EXPECT_TRUE(m(a, eps).is_zero());
    EXPECT_EQ(m(eps, a), GradedVector(a, half()));
    EXPECT_EQ(m(a, b), GradedVector(eps, half()));
    EXPECT_TRUE(check_split_shape(m).passed());
}

TEST(Associator, RoundTrip)
{
    for (const auto& alg : {build_asl2(), build_ah1(0), build_ah1(1), build_ah1(-2), build_AK1(3)}) {
        const AlgebraTable back = m_to_bracket(bracket_to_m(alg));
        for (const auto& x : alg.basis())
            for (const auto& y : alg.basis())
                EXPECT_EQ(back.product(x, y), alg.product(x, y)) << alg.name();
    }
}

TEST(Associator, SkewEquivalenceOnCatalog)
{
    for (const auto& alg : {build_asl2(), build_ah1(0), build_ah1(1), build_ah1(-2), build_AK1(4)})
        EXPECT_TRUE(skew_equivalence(bracket_to_m(alg)).passed()) << alg.name();
}

TEST(Associator, OddBlockRescaling)
{
    const BilinearMap m = bracket_to_m(build_asl2()).scaled_block(1, 1, 3);
    EXPECT_TRUE(skew_equivalence(m).passed());
}

TEST(Associator, PerturbedSecondPairsWithCacT)
{
    const BilinearMap m = bracket_to_m(build_asl2()).with_value(eps, a, GradedVector(a, half()) + GradedVector(b));
    const Report r = skew_equivalence(m);
    EXPECT_NE(r.first("Second"), nullptr);
    EXPECT_NE(r.first("CacT"), nullptr);
    EXPECT_TRUE(shared_witness(r, "Second", "CacT"));
    EXPECT_EQ(r.first("Pairing"), nullptr);
}

TEST(Associator, EveryPairingUnderMutation)
{
    const std::map<std::string, std::string> partner{
        {"AssCommT", "First"}, {"CacT", "Second"}, {"ICommT", "Third"}, {"Jack", "Fourth"}};
    for (const auto& mut : catalog_mutations()) {
        auto it = partner.find(mut.target);
        if (it == partner.end())
            continue;
        const Report r = skew_equivalence(bracket_to_m(mut.algebra));
        EXPECT_TRUE(shared_witness(r, it->second, it->first)) << mut.description;
        EXPECT_EQ(r.first("Pairing"), nullptr) << mut.description;
    }
}

TEST(Associator, BrokenThirdHasXYYWitness)
{
    // m(v,v)=v, m(w1,w2)=v skew, m(v,w1)=w1 but m(v,w2)=0: only (Third) can see it
    AlgebraTable carrier = AlgebraTable::finite("vw", AlgebraKind::antialgebra, {Label("v")}, {Label("w", 1), Label("w", 2)}, {});
    const Label v("v"), w1("w", 1), w2("w", 2);
    BilinearMap m{"broken-third", carrier, [=](const Label& x, const Label& y) -> GradedVector {
                      if (x == v && y == v)
                          return GradedVector(v);
                      if (x == v && y == w1)
                          return GradedVector(w1);
                      if (x == w1 && y == w2)
                          return GradedVector(v);
                      if (x == w2 && y == w1)
                          return GradedVector(v, -1);
                      return {};
                  }};
    const Report r = skew_equivalence(m);
    const Violation* third = r.first("Third");
    ASSERT_NE(third, nullptr);
    EXPECT_EQ(third->witness.size(), 3u);
    EXPECT_EQ(Label::parse(third->witness[0]), v);
    EXPECT_NE(r.first("ICommT"), nullptr);
    EXPECT_EQ(r.first("Second"), nullptr);
    EXPECT_EQ(r.first("Fourth"), nullptr);
}

TEST(Associator, GerstenhaberSquare)
{
    EXPECT_TRUE(gerstenhaber_square(matrix_algebra(2)).passed());
    EXPECT_TRUE(gerstenhaber_square(matrix_algebra(3)).passed());
    BilinearMap broken = matrix_algebra(2).with_value(Label("E", 0), Label("E", 0), GradedVector(Label("E", 1)));
    EXPECT_FALSE(gerstenhaber_square(broken).passed());
}

TEST(Associator, SplitShapeViolation)
{
    const BilinearMap m = bracket_to_m(build_asl2()).with_value(a, eps, GradedVector(a));
    EXPECT_FALSE(check_split_shape(m).passed());
    EXPECT_THROW(m_to_bracket(m), std::invalid_argument);
}
