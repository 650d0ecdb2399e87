#pragma once

#include "antialg/algebra.hpp"
#include "antialg/report.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace antialg {

// asl(2): basis {eps; a, b}, ]eps,eps[ = eps, ]eps,a[ = a/2, ]eps,b[ = b/2, ]a,b[ = eps/2.
AlgebraTable build_asl2();
// ah1(kappa): basis {alpha; a, b}, ]alpha,a[ = kappa b, ]a,b[ = alpha/2.
AlgebraTable build_ah1(const Rational& kappa);
// AK(1): e_n (n integer, even), l_i (i half-integer, odd);
//   ]e_n,e_m[ = e_{n+m}, ]e_n,l_i[ = l_{n+i}/2, ]l_i,l_j[ = odd_sign (i-j)/2 e_{i+j}.
// odd_sign = -1 gives the sign-flipped variant (isomorphic via index reversal).
AlgebraTable build_AK1(const Window& w, int odd_sign = 1);
AlgebraTable build_AK1(long n, int odd_sign = 1);
// K(1): x_n, xi_i with [x_i,x_j] = (j-i) x_{i+j}, [x_i,xi_j] = (j-i/2) xi_{i+j}, [xi_i,xi_j] = 2 x_{i+j}.
AlgebraTable build_K1(const Window& w);
AlgebraTable build_K1(long n);
// osp(1|2) as the restriction of K(1) to {x_-1, x_0, x_1, xi_-1/2, xi_1/2}.
AlgebraTable build_osp12();

// Zero-product algebra with the given numbers of even/odd generators ("z0:i", "z1:i").
AlgebraTable build_abelian(std::size_t even, std::size_t odd);

// Small deliberately broken tables; each fails exactly the identity `target`.
struct CatalogMutation {
    std::string description;
    std::string target;
    AlgebraTable algebra;
};
std::vector<CatalogMutation> catalog_mutations();

// Names: asl2, ah1:<kappa>, ak1:<window>, k1:<window>, osp12.  Throws std::invalid_argument.
AlgebraTable build_builtin(const std::string& name);

// Map of basis labels of `src` to vectors of `dst`; checks phi(]x,y[) = ]phi x, phi y[ on
// all basis pairs of src (identity "Hom").
Report check_homomorphism(const AlgebraTable& src, const AlgebraTable& dst,
                          const std::map<Label, GradedVector>& phi);
GradedVector apply_linear(const std::map<Label, GradedVector>& phi, const GradedVector& v);

// The asl(2) inside AK(1): eps -> e_0, a -> l_i, b -> c l_{-i} with c fixed by ]a,b[ = eps/2.
std::map<Label, GradedVector> asl2_into_ak1(const Rational& i, int odd_sign = 1);

// e_n -> e_{-n}, l_i -> l_{-i}: isomorphism from AK(1) to its sign-flipped variant
// (defined on the doubled window so products of window elements can be mapped).
std::map<Label, GradedVector> ak1_index_reversal(const Window& w);

// ---------------------------------------------------------------- modules

enum class CoadjointConvention {
    twisted,    // rho_a f = (-1)^{p(a)} (-1)^{p(a)p(f)} f o ad_a
    untwisted,  // rho_a f = (-1)^{p(a)p(f)} f o ad_a
    lie,        // rho_a f = - f o ad_a   (Lie-algebra coadjoint; not a module in general)
};

// A module over an antialgebra: a graded space B with an even linear map rho: A -> End(B).
struct AntiModule {
    using Action = std::function<GradedVector(const Label& a, const Label& b)>;
    using ParityRule = std::function<std::optional<int>(const Label&)>;

    std::string name;
    AlgebraTable algebra;
    std::vector<Label> even_basis;
    std::vector<Label> odd_basis;
    ParityRule parity_rule;  // for modules with an unbounded basis; empty = finite lists
    Action rho;

    std::vector<Label> basis() const;
    int parity(const Label& b) const;
    bool contains(const Label& b) const;
    GradedVector act(const Label& a, const GradedVector& v) const;
    GradedVector act(const GradedVector& a, const GradedVector& v) const;
    std::size_t dim() const { return even_basis.size() + odd_basis.size(); }
};

AntiModule trivial_module(const AlgebraTable& a, int parity = 0, std::size_t dim = 1);
AntiModule adjoint_module(const AlgebraTable& a);
AntiModule coadjoint_module(const AlgebraTable& a, CoadjointConvention conv = CoadjointConvention::twisted);
// Finite module from an explicit action table rho[(a, b)].
AntiModule table_module(std::string name, const AlgebraTable& a, std::vector<Label> even,
                        std::vector<Label> odd, std::map<std::pair<Label, Label>, GradedVector> rho);

// Dual label helpers: "e:3" <-> "e*:3", adjoint copy "e:3" <-> "e':3".
Label dual_label(const Label& l);
Label adjoint_label(const Label& l);

// a semidirect B: ](a,b),(a',b')[ = (]a,a'[, rho_a b' + (-1)^{p(a')p(b)} rho_{a'} b), B x B -> 0.
AlgebraTable semidirect(const AlgebraTable& a, const AntiModule& m);

}  // namespace antialg
