#include "antialg/catalog.hpp"
#include "antialg/conventions.hpp"
#include "antialg/representations.hpp"
#include "antialg/superization.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace antialg;

namespace {

RatMatrix dense(std::vector<RatVector> rows) { return RatMatrix::from_rows(rows); }

MatrixRep asl2_from_frep(long n, long k)
{
    return pullback(build_FRep(n, k), build_asl2(), asl2_into_ak1(half(), conventions().frep_odd_sign));
}

}  // namespace

TEST(SuperPoly, Derivations)
{
    // D x^k = k xi x^(k-1), D (xi x^k) = x^k
    for (long k = -3; k <= 3; ++k) {
        EXPECT_EQ(SuperPoly1::monomial(k, 0).D(), k ? SuperPoly1::monomial(k - 1, 1, k) : SuperPoly1());
        EXPECT_EQ(SuperPoly1::monomial(k, 1).D(), SuperPoly1::monomial(k, 0));
        // D^2 = d_x, Dbar^2 = -d_x
        const SuperPoly1 f = SuperPoly1::monomial(k, 0, 3) + SuperPoly1::monomial(k, 1, -2);
        EXPECT_EQ(f.D().D(), f.dx());
        EXPECT_EQ(f.Dbar().Dbar(), Rational(-1) * f.dx());
    }
}

TEST(WOp, AnticommutatorSymmetries)
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> v(-2, 2);
    auto random_op = [&](int parity) {
        RatMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (((i >= 2) != (j >= 2)) == (parity == 1))
                    m.set(i, j, v(rng));
        return WOp::from_matrix(m, parity);
    };
    for (int t = 0; t < 20; ++t) {
        const WOp x = random_op(1), e = random_op(0), f = random_op(0), y = random_op(1);
        // ]X,X[ = 0 for odd X under XY - YX; ]E,F[ = ]F,E[; ]E,Y[ = ]Y,E[
        EXPECT_EQ(anticommutator(x, y).m, (compose(x, y) - compose(y, x)).m);
        EXPECT_TRUE(anticommutator(x, x).m.is_zero());
        EXPECT_EQ(anticommutator(e, f).m, anticommutator(f, e).m);
        EXPECT_EQ(anticommutator(e, y).m, anticommutator(y, e).m);
        EXPECT_EQ(anticommutator(e, f).m, (compose(e, f) + compose(f, e)).m);
    }
}

TEST(Reps, HalfProjectorRep)
{
    // chi(eps) = P_1 / 2 on a 1|1 space satisfies ]chi eps, chi eps[ = chi eps, but with
    // chi(a) = chi(b) = 0 the pair (a, b) fails: chi(]a,b[) = P_1 / 4
    const AlgebraTable a = build_asl2();
    MatrixRep r = finite_rep("proj", a, {{Label("eps"), dense({{0, 0}, {0, half()}})}}, 1, 1);
    const Report rep = check_rep(r);
    ASSERT_FALSE(rep.passed());
    for (const auto& v : rep.violations) {
        ASSERT_GE(v.witness.size(), 2u);
        EXPECT_TRUE((v.witness[0] == "a" && v.witness[1] == "b") || (v.witness[0] == "b" && v.witness[1] == "a"));
    }
    MatrixRep bad = finite_rep("id", a, {{Label("eps"), dense({{1, 0}, {0, 1}})}}, 1, 1);
    EXPECT_NE(check_rep(bad).first(identity::rep), nullptr);
    EXPECT_THROW(finite_rep("parity", a, {{Label("a"), dense({{1, 0}, {0, 0}})}}, 1, 1), std::invalid_argument);
}

TEST(Reps, FRepCalibration)
{
    const FRepCalibration c = calibrate_frep(2, 6);
    EXPECT_EQ(c.trials.size(), 32u);
    EXPECT_EQ(c.passing.size(), 2u);
    EXPECT_EQ(c.orbits, 1u);
    ASSERT_TRUE(c.chosen.has_value());
    EXPECT_EQ(c.chosen->c_l, half());
    EXPECT_EQ(c.chosen->c_e, half());
    EXPECT_EQ(c.chosen->odd_sign, -1);
    // stable across windows
    const FRepCalibration c2 = calibrate_frep(3, 7);
    ASSERT_TRUE(c2.chosen.has_value());
    EXPECT_EQ(c2.chosen->c_l, c.chosen->c_l);
    EXPECT_EQ(c2.chosen->c_e, c.chosen->c_e);
}

TEST(Reps, UncalibratedFails)
{
    EXPECT_FALSE(check_rep(build_FRep(2, 5, 1, 1, -1)).passed());
    // the printed odd-odd sign has no rational solution
    EXPECT_FALSE(check_rep(build_FRep(2, 5, half(), half(), 1)).passed());
}

TEST(Reps, FRepOnWindow5)
{
    const MatrixRep f = build_FRep(5, 8);
    const Report r = check_rep(f);
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.evaluations, 0u);
    // ]chi(l_1/2), chi(l_-1/2)[ = chi(]l_1/2, l_-1/2[) = -chi(e_0)/2 with the flipped sign
    const WOp lhs = anticommutator(f.chi(Label("l", half())), f.chi(Label("l", -half())));
    const WOp rhs = f(build_AK1(5, -1).product(Label("l", half()), Label("l", -half())));
    EXPECT_EQ(build_AK1(5, -1).product(Label("l", half()), Label("l", -half())), GradedVector(Label("e", 0), -half()));
    EXPECT_TRUE(differing_columns(lhs, rhs).empty());
}

TEST(Reps, WindowEdgesAreFlagged)
{
    const MatrixRep f = build_FRep(2, 3);
    const WOp op = f.chi(Label("l", Rational(3, 2)));
    EXPECT_FALSE(op.all_valid());
}

TEST(Reps, SystemRepAndGhost)
{
    const Asl2Operators s = asl2_operators(asl2_from_frep(3, 6));
    EXPECT_TRUE(check_asl2_rep(s).passed());
    EXPECT_TRUE(check_ghost_casimir(s).passed());
}

TEST(Reps, GhostOnTheZeroRep)
{
    // E = A = B = 0 satisfies the relations and Gamma = -Id/2
    const Asl2Operators z = asl2_operators(zero_rep(build_asl2(), 2, 1));
    EXPECT_TRUE(check_asl2_rep(z).passed());
    EXPECT_EQ(ghost_casimir(z.A, z.B).m, Rational(-1, 2) * RatMatrix::identity(3));
    EXPECT_TRUE(check_ghost_casimir(z).passed());
}

TEST(Reps, Certificate)
{
    const RatMatrix zero(2, 2);
    const Certificate c = finite_triviality_certificate(zero, zero, zero, 1, 1);
    EXPECT_TRUE(c.precondition);
    EXPECT_TRUE(c.passed);
    // approximately but not exactly a solution: rejected at the precondition
    RatMatrix e(4, 4);
    e.set(0, 0, Rational(1, 1000));
    const Certificate d = finite_triviality_certificate(e, RatMatrix(4, 4), RatMatrix(4, 4), 2, 2);
    EXPECT_FALSE(d.precondition);
    EXPECT_FALSE(d.passed);
}

TEST(Reps, FuzzFindsOnlyZero)
{
    const FuzzResult f11 = fuzz_triviality(1, 1, 0, 1);
    EXPECT_EQ(f11.candidates, 729u);
    EXPECT_EQ(f11.exact_solutions, 1u);
    for (auto [d0, d1] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 3}, {1, 3}}) {
        const FuzzResult f = fuzz_triviality(d0, d1, 500, 5);
        EXPECT_GT(f.exact_solutions, 0u);
        EXPECT_EQ(f.nonzero_solutions, 0u);
        EXPECT_TRUE(f.all_certified);
    }
}

TEST(Reps, ExtensionToOsp12)
{
    const MatrixRep r = asl2_from_frep(3, 6);
    EXPECT_TRUE(extension_well_definedness(r).passed());
    const MatrixRep e = extend_to_super(r);
    EXPECT_TRUE(check_super_rep(e).passed());
    EXPECT_TRUE(check_super_rep(extend_to_super(zero_rep(build_asl2(), 2, 2))).passed());
}

TEST(Reps, K1Bridge)
{
    const MatrixRep f = build_FRep(6, 9);
    EXPECT_TRUE(k1_bridge_well_definedness(f, 2).passed());
    const BridgeCalibration c = calibrate_k1_bridge(f, 2);
    ASSERT_TRUE(c.chosen.has_value());
    EXPECT_EQ(c.chosen->raw() * c.chosen->raw(), 4);
    EXPECT_TRUE(check_super_rep(k1_bridge(f, 2, *c.chosen)).passed());
    EXPECT_FALSE(check_super_rep(k1_bridge(f, 2, 1)).passed());
}

TEST(Reps, ContactFields)
{
    const auto& c = conventions();
    EXPECT_TRUE(check_contact_K1(2, 6, c.contact_s, c.contact_dbar, c.contact_odd_scale).passed());
    EXPECT_FALSE(check_contact_K1(2, 6, 2, false, 1).passed());
    const ContactCalibration cal = calibrate_contact(2, 6);
    ASSERT_TRUE(cal.chosen.has_value());
    EXPECT_EQ(cal.chosen->s, half());
    EXPECT_TRUE(cal.chosen->dbar);
    // literal field of h = x is x d_x + 2 xi D; on xi it gives 2 xi
    const PolySuperModule mod{-2, 2};
    const WOp lit = contact_field(mod, SuperPoly1::monomial(1, 0), ContactMode::literal);
    EXPECT_EQ(lit.m.at(mod.index(0, 1), mod.index(0, 1)), 2);
}
