#pragma once

#include "antialg/algebra.hpp"
#include "antialg/conventions.hpp"
#include "antialg/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace antialg {

namespace identity {
inline constexpr const char* taylor = "Taylor";
inline constexpr const char* lie_invariance = "LieInv";
inline constexpr const char* linear_asl2 = "LinearAsl2";
}  // namespace identity

// Laurent polynomial in p, q with one odd coordinate tau: sum c p^a q^b tau^e, e in {0,1}.
class SuperFunction {
public:
    struct Mono {
        long a = 0, b = 0;
        int e = 0;
        friend auto operator<=>(const Mono&, const Mono&) = default;
    };
    using Terms = std::map<Mono, Rational>;

    SuperFunction() = default;
    static SuperFunction monomial(long a, long b, int e, const Rational& c = 1);
    static SuperFunction constant(const Rational& c) { return monomial(0, 0, 0, c); }
    static SuperFunction p() { return monomial(1, 0, 0); }
    static SuperFunction q() { return monomial(0, 1, 0); }
    static SuperFunction tau() { return monomial(0, 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(long a, long b, int e) const;
    SuperFunction& add(long a, long b, int e, const Rational& c);
    SuperFunction& add(const SuperFunction& f, const Rational& c = 1);
    ParityClass parity() const;  // zero counts as even
    int parity_bit() const;      // throws on mixed

    SuperFunction dp() const;
    SuperFunction dq() const;
    SuperFunction dtau() const;  // left derivative

    friend SuperFunction operator+(SuperFunction a, const SuperFunction& b) { return a.add(b); }
    friend SuperFunction operator-(SuperFunction a, const SuperFunction& b) { return a.add(b, -1); }
    friend SuperFunction operator*(const Rational& c, const SuperFunction& f);
    friend SuperFunction operator*(const SuperFunction& f, const SuperFunction& g);
    friend bool operator==(const SuperFunction&, const SuperFunction&) = default;

    std::string str() const;  // "3/2 p^-1 q^2 τ + ..."

private:
    Terms terms_;
};

// lambda with E(F) = lambda F; nullopt when monomials disagree (or F = 0).
std::optional<Rational> euler_degree(const SuperFunction& f);

enum class Dir { p, q, tau };
int dir_parity(Dir d);
const char* dir_name(Dir d);
SuperFunction derivative(Dir d, const SuperFunction& f);

struct SuperVectorField {
    SuperFunction fp, fq, ftau;
    int parity = 0;
    SuperFunction operator()(const SuperFunction& f) const;
};

// sum coef X^Y; tau^tau allowed (odd-odd wedge is symmetric).
struct BivectorTerm {
    SuperFunction coef;
    Dir x, y;
};
struct Bivector {
    std::string name;
    std::vector<BivectorTerm> terms;
    int parity() const;  // throws if inhomogeneous
    std::string str() const;
};

Bivector poisson_bivector();  // d_p^d_q + 1/2 d_tau^d_tau
Bivector lambda_bivector();   // d_tau^E + tau d_p^d_q

struct GeoConvention {
    int sign = -1;
    int koszul = 1;  // exponent: 0, pFpG, pXpY, pXpY + pFpG
    bool tau_symmetric = false;
    bool coeff_sign = false;
    friend bool operator==(const GeoConvention&, const GeoConvention&) = default;
    std::string str() const;
};
GeoConvention calibrated_geo_convention(const Conventions& c = conventions());
std::vector<GeoConvention> all_geo_conventions();  // 32

SuperFunction contract(const Bivector& b, const SuperFunction& f, const SuperFunction& g,
                       const GeoConvention& conv = calibrated_geo_convention());
// ]F,G[ = (-1)^{p(F)}/2 <Lambda, dF^dG>
SuperFunction anti_bracket(const SuperFunction& f, const SuperFunction& g,
                           const GeoConvention& conv = calibrated_geo_convention());
SuperFunction poisson_bracket(const SuperFunction& f, const SuperFunction& g,
                              const GeoConvention& conv = calibrated_geo_convention());
// X_h with components {h, p}, {h, q}, {h, tau}.
SuperVectorField hamiltonian_field(const SuperFunction& h, const GeoConvention& conv = calibrated_geo_convention());

// l_i = p^{1/2-i} q^{i+1/2}, e_n = tau p^{-n} q^n.  Function parity is opposite to algebra parity.
SuperFunction taylor_function(const Label& l);
std::optional<Label> taylor_label(const SuperFunction& f);

// Taylor images reproduce the AK(1) table (odd_sign +1) on all basis pairs of the window.
Report check_taylor(long window, const GeoConvention& conv = calibrated_geo_convention());

struct GeoCalibration {
    struct Trial {
        GeoConvention conv;
        bool taylor = false;
        bool skew = false;
        std::size_t cls = 0;  // index of the probe-equivalence class
    };
    std::vector<Trial> trials;
    std::size_t classes = 0;
    std::size_t taylor_classes = 0;
    std::size_t chosen_classes = 0;  // after the SkewP tie-break
    std::optional<GeoConvention> chosen;
};
GeoCalibration calibrate_geometry(long window = 5);

// Identification tau -> eps, p -> a, q -> b (up to scalars) of the linear functions with asl(2).
struct LinearAsl2 {
    std::map<Label, SuperFunction> images;
    Report report;
};
LinearAsl2 linear_asl2(const GeoConvention& conv = calibrated_geo_convention());

// p^2, q^2, pq, p tau, q tau with labels pp, qq, pq, pt, qt.
std::vector<std::pair<Label, SuperFunction>> quadratic_hamiltonians();
// The span of the quadratics under the Poisson bracket as a superalgebra table.
AlgebraTable poisson_quadratics(const GeoConvention& conv = calibrated_geo_convention());

// Monomials p^a q^b tau^e with a, b >= 0 and a + b + e <= degree.
std::vector<SuperFunction> polynomial_monomials(long degree);

// X<B,dF^dG> - (-1)^{p(X)p(B)} [<B,d(XF)^dG> + (-1)^{p(X)p(F)} <B,dF^d(XG)>] on monomials of
// degree <= max_degree.
Report lie_defect(const SuperVectorField& x, const Bivector& b, long max_degree,
                  const GeoConvention& conv = calibrated_geo_convention());

struct InvariantOptions {
    enum class Parity { all, even, odd } parity = Parity::all;
    std::vector<std::pair<Dir, Dir>> pairs{{Dir::p, Dir::q}, {Dir::tau, Dir::p}, {Dir::tau, Dir::q},
                                           {Dir::tau, Dir::tau}};
    long test_degree = -1;  // default: bound + 2
    bool even_fields_only = false;  // only p^2, q^2, pq (the sp(2) part)
};
// Kernel basis of bivectors with polynomial coefficients of degree <= bound that are invariant
// under the five quadratic Hamiltonian fields.
std::vector<Bivector> invariant_bivector_space(long bound, const InvariantOptions& opt = {},
                                               const GeoConvention& conv = calibrated_geo_convention());
// Coordinates of b in span{P, Lambda}, if it lies there.
std::optional<std::pair<Rational, Rational>> in_span_P_Lambda(const Bivector& b);

}  // namespace antialg
