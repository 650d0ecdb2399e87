#pragma once

#include "antialg/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace antialg {

// Parity bits are plain ints in {0, 1}; sums are taken mod 2.
enum class ParityClass { even, odd, mixed };

inline int parity_add(int a, int b) { return (a + b) & 1; }

// A basis label: a family symbol with an optional integer or half-integer index.
// Printed and parsed as "eps", "e:3", "l:1/2", "l:-3/2".
struct Label {
    std::string family;
    std::optional<Rational> index;

    Label() = default;
    Label(std::string fam) : family(std::move(fam)) {}
    Label(const char* fam) : family(fam) {}
    Label(std::string fam, Rational idx) : family(std::move(fam)), index(std::move(idx)) {}

    static Label parse(std::string_view text);  // throws std::invalid_argument
    std::string str() const;
    const Rational& idx() const;                 // throws if no index

    friend bool operator==(const Label&, const Label&) = default;
    friend std::strong_ordering operator<=>(const Label& a, const Label& b)
    {
        if (auto c = a.family <=> b.family; c != 0)
            return c;
        if (a.index.has_value() != b.index.has_value())
            return a.index.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
        if (!a.index)
            return std::strong_ordering::equal;
        return *a.index <=> *b.index;
    }
    friend std::ostream& operator<<(std::ostream& os, const Label& l) { return os << l.str(); }
};

// Finite formal linear combination of labels; zero coefficients are never stored.
class GradedVector {
public:
    using Terms = std::map<Label, Rational>;

    GradedVector() = default;
    GradedVector(const Label& l, Rational c = 1) { add(l, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const Label& l) const;

    GradedVector& add(const Label& l, const Rational& c);
    GradedVector& add(const GradedVector& v, const Rational& c = 1);

    GradedVector& operator+=(const GradedVector& v) { return add(v, 1); }
    GradedVector& operator-=(const GradedVector& v) { return add(v, -1); }
    GradedVector& operator*=(const Rational& c);

    friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
    friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
    friend GradedVector operator*(const Rational& c, GradedVector v) { return v *= c; }
    friend GradedVector operator*(GradedVector v, const Rational& c) { return v *= c; }
    GradedVector operator-() const { return *this * Rational(-1); }
    friend bool operator==(const GradedVector&, const GradedVector&) = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const GradedVector& v) { return os << v.str(); }

private:
    Terms terms_;
};

}  // namespace antialg
