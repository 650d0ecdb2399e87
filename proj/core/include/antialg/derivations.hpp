#pragma once

#include "antialg/algebra.hpp"
#include "antialg/matrix.hpp"
#include "antialg/report.hpp"

#include <functional>
#include <map>
#include <optional>

namespace antialg {

namespace identity {
inline constexpr const char* leibniz = "Leibniz";
inline constexpr const char* k1_relation = "CAlgRel";
}  // namespace identity

// Parity-homogeneous linear operator given on basis labels.
struct LinearOperator {
    int parity = 0;
    std::function<GradedVector(const Label&)> on_basis;

    GradedVector operator()(const Label& l) const { return on_basis(l); }
    GradedVector operator()(const GradedVector& v) const;

    // Matrix in the ordered basis: column j = image of basis[j].
    static LinearOperator from_matrix(const std::vector<Label>& basis, const RatMatrix& m, int parity);
    RatMatrix to_matrix(const std::vector<Label>& basis) const;
};

// D = X o Y - (-1)^{p(X)p(Y)} Y o X.
LinearOperator super_commutator(const LinearOperator& x, const LinearOperator& y);
LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator*(const Rational& c, const LinearOperator& a);

// D]x,y[ - ]Dx,y[ - (-1)^{p(D)p(x)} ]x,Dy[ on all basis pairs of the algebra (window).
Report derivation_defect(const LinearOperator& d, const AlgebraTable& a);

struct DerivationAlgebra {
    AlgebraTable algebra;                   // superalgebra, labels "d0:k" / "d1:k"
    std::vector<Label> source_basis;        // basis of the antialgebra
    std::map<Label, RatMatrix> operators;   // derivation label -> matrix in source_basis
    LinearOperator op(const Label& d) const;
};

// Solves the Leibniz system separately for even and odd operators (kernel basis) and
// tabulates the super-commutator in that basis.  Throws std::logic_error on non-closure.
DerivationAlgebra derivation_algebra(const AlgebraTable& a);

// Explicit isomorphism osp(1|2) -> g for a 3|2 Lie superalgebra g, found by sending
// xi_{1/2} to an odd u and solving the linear condition [[u,v],u] = u for the image v of
// xi_{-1/2}; x_1, x_0, x_-1 go to [u,u]/2, [u,v]/2, [v,v]/2.  Verified as a bijective
// homomorphism before returning.
std::optional<std::map<Label, GradedVector>> match_osp12(const AlgebraTable& g);

// K(1) generators acting on AK(1):
//   x_n(e_m) = m e_{n+m},  x_n(l_i) = (i - n/2) l_{n+i},
//   xi_i(e_n) = l_{i+n},   xi_i(l_j) = (j - i) e_{i+j}.
LinearOperator k1_action(const Label& k1_label, int ak1_odd_sign = 1);
LinearOperator k1_action(const GradedVector& k1_element, int ak1_odd_sign = 1);

// Leibniz defect of every generator with |index| <= n on all AK(1) pairs with
// |index| <= n, and the K(1) relations [X_a, X_b] = X_{[a,b]} on the same labels.
Report check_K1_action(long n);

}  // namespace antialg
