#pragma once

#include "antialg/algebra.hpp"
#include "antialg/report.hpp"

#include <optional>

namespace antialg {

namespace identity {
inline constexpr const char* skew = "SkewP";
inline constexpr const char* ass_comm = "AssCommT";
inline constexpr const char* cact = "CacT";
inline constexpr const char* icomm = "ICommT";
inline constexpr const char* jack = "Jack";
inline constexpr const char* super_skew = "SuperSkew";
inline constexpr const char* super_jacobi = "SuperJacobi";
}  // namespace identity

// The five identities of a Lie antialgebra on all basis pairs/triples enumerated by
// the algebra (family algebras: the current window).
//   SkewP     ]x,y[ = (-1)^{p(x)p(y)} ]y,x[
//   AssCommT  ]x1,]x2,x3[[ = ]]x1,x2[,x3[
//   CacT      ]x1,]x2,y[[ = 1/2 ]]x1,x2[,y[          (both orders of x1, x2)
//   ICommT    ]x,]y1,y2[[ = ]]x,y1[,y2[ + ]y1,]x,y2[[
//   Jack      ]y1,]y2,y3[[ + cyclic = 0
Report check_antialgebra(const AlgebraTable& a);

// [x,y] = -(-1)^{p(x)p(y)} [y,x] and [x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]].
Report check_superalgebra(const AlgebraTable& a);

// Dispatches on the algebra kind.
Report check_axioms(const AlgebraTable& a);

// Unit of the even part, if one exists (finite algebras): u with ]u,x[ = x for all even x.
std::optional<GradedVector> even_unit(const AlgebraTable& a);

}  // namespace antialg
