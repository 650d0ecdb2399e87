#pragma once

#include "antialg/algebra.hpp"
#include "antialg/matrix.hpp"
#include "antialg/report.hpp"

#include <map>
#include <optional>
#include <utility>

namespace antialg {

namespace identity {
inline constexpr const char* well_defined = "WellDefined";
}  // namespace identity

// S^2 of the odd part: generators a (.) b for a <= b in the odd basis order, relations
// ]alpha,a[ (.) b - a (.) ]alpha,b[ for even alpha and odd a, b.
struct SymSquareSpace {
    std::vector<Label> odd;                           // odd basis of the antialgebra
    std::vector<std::pair<Label, Label>> generators;  // ordered pairs, first <= second
    std::vector<RatVector> relations;                 // rows over generators (nonzero only)
    QuotientSpace quotient;

    std::size_t index(const Label& a, const Label& b) const;
    // a (.) b as a vector over generators (bilinear, symmetric)
    RatVector sym(const GradedVector& a, const GradedVector& b) const;
};

struct Superization {
    AlgebraTable source;
    SymSquareSpace square;
    Rational normalization;
    AlgebraTable algebra;           // superalgebra; even labels "s:(a,b)", odd = source odd labels
    std::vector<Label> even_labels; // one per kept generator

    // Class of a vector over generators, as an even element of `algebra`.
    GradedVector project(const RatVector& v) const;
    // [a, b] = class of a (.) b for odd a, b.
    GradedVector odd_square(const GradedVector& a, const GradedVector& b) const;

    // Brackets on representatives (vectors over generators / odd vectors of the source).
    RatVector even_even(const RatVector& u, const RatVector& v) const;    // before projection
    GradedVector even_odd(const RatVector& u, const GradedVector& c) const;
};

Label sym_label(const Label& a, const Label& b);

SymSquareSpace sym_square(const AlgebraTable& a);

// The bracket (with the four-term symmetrization scaled by `normalization`):
//   [a (.) b, c (.) d] = norm * sum over a<->b, c<->d of ( ]a,]b,c[[ (.) d - ]c,]d,a[[ (.) b ),
//   [a (.) b, c] = ]a,]b,c[[ + ]b,]a,c[[,   [a, b] = a (.) b.
// Default normalization: conventions().sym_normalization.
Superization superize(const AlgebraTable& a);
Superization superize(const AlgebraTable& a, const Rational& normalization);

// [relation, generator] must project to zero (even generators) or vanish (odd generators).
Report well_definedness(const Superization& s);

struct NormalizationCalibration {
    std::vector<std::pair<std::string, bool>> tried;  // name, super-Jacobi passes on asl(2)
    std::optional<std::pair<std::string, Rational>> chosen;
};
// Tries sum (1), average (1/4) and half-sum (1/2) in that order on asl(2).
NormalizationCalibration calibrate_sym_normalization();

struct DerivationComparison {
    std::size_t super_even = 0, super_odd = 0, der_even = 0, der_odd = 0;
    bool dims_equal = false;
    // explicit isomorphism superize(A) -> Der(A), when both are osp(1|2)
    std::optional<std::map<Label, GradedVector>> isomorphism;
};
DerivationComparison compare_to_derivations(const AlgebraTable& a);

}  // namespace antialg
