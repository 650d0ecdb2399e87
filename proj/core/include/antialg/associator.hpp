#pragma once

#include "antialg/algebra.hpp"
#include "antialg/report.hpp"

#include <functional>
#include <map>

namespace antialg {

namespace identity {
inline constexpr const char* split = "SplitM";
inline constexpr const char* assoc = "Assoc";
inline constexpr const char* first = "First";
inline constexpr const char* second = "Second";
inline constexpr const char* third = "Third";
inline constexpr const char* fourth = "Fourth";
inline constexpr const char* pairing = "Pairing";
}  // namespace identity

// Bilinear map m on E = V + W.  The carrier algebra only supplies the basis, parity and
// window (V = even labels, W = odd labels); its own product is ignored.
struct BilinearMap {
    using Fn = std::function<GradedVector(const Label&, const Label&)>;

    std::string name;
    AlgebraTable carrier;
    Fn m;
    bool split = true;             // expected to satisfy (SplitM)
    bool nonsymmetric_vv = false;  // generalized form: V x V block need not be symmetric

    GradedVector operator()(const Label& x, const Label& y) const { return m(x, y); }
    GradedVector operator()(const GradedVector& u, const GradedVector& v) const;
    // Copy with one value overridden.
    BilinearMap with_value(const Label& x, const Label& y, const GradedVector& v) const;
    // Copy with one block scaled; block = (parity of x, parity of y).
    BilinearMap scaled_block(int px, int py, const Rational& c) const;
};

// m(x1,x2) = ]x1,x2[/2, m(x,y) = ]x,y[, m(y,x) = 0, m(y1,y2) = ]y1,y2[.
BilinearMap bracket_to_m(const AlgebraTable& a);
// Inverse: ]x1,x2[ = 2m(x1,x2), ]x,y[ = ]y,x[ = m(x,y), ]y1,y2[ = m(y1,y2).
// Throws std::invalid_argument if m violates (SplitM) on the carrier basis.
AlgebraTable m_to_bracket(const BilinearMap& m);

// V x V symmetric (unless generalized), W x V zero, W x W skew.
Report check_split_shape(const BilinearMap& m);

// m(m(a,b),c) - m(a,m(b,c)) on all basis triples (identity "Assoc").
Report gerstenhaber_square(const BilinearMap& m);

// (First)-(Fourth) evaluated on m together with (AssCommT),(CacT),(ICommT),(Jack) on
// m_to_bracket(m); a "Pairing" violation is added for every witness where the two
// members of a pair disagree about vanishing.
Report skew_equivalence(const BilinearMap& m);

// Full (non-split) bilinear map given by structure constants on an even basis; used for
// ordinary associative algebras such as matrix algebras.
BilinearMap full_map(std::string name, std::vector<Label> basis,
                     std::map<std::pair<Label, Label>, GradedVector> table);
// Matrix units E(i,j) of gl(n) as labels "E:<i*n+j>" with their multiplication.
BilinearMap matrix_algebra(std::size_t n);

}  // namespace antialg
