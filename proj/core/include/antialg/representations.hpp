#pragma once

#include "antialg/algebra.hpp"
#include "antialg/matrix.hpp"
#include "antialg/report.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

namespace antialg {

namespace identity {
inline constexpr const char* rep = "eqRep";
inline constexpr const char* super_rep = "SuperRep";
inline constexpr const char* rep_well_defined = "RepWellDefined";
inline constexpr const char* sys_ab = "AB-BA=E";
inline constexpr const char* sys_ae = "AE+EA=A";
inline constexpr const char* sys_be = "BE+EB=B";
inline constexpr const char* sys_ee = "E^2=E";
inline constexpr const char* ghost = "Gamma^2=Id/4";
}  // namespace identity

// Functions on R^{1|1}: sums of c x^k xi^e (k any integer, e in {0,1}).
class SuperPoly1 {
public:
    using Key = std::pair<long, int>;

    SuperPoly1() = default;
    static SuperPoly1 monomial(long k, int e, const Rational& c = 1);

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    ParityClass parity() const;
    void add(long k, int e, const Rational& c);

    friend SuperPoly1 operator+(const SuperPoly1& a, const SuperPoly1& b);
    friend SuperPoly1 operator*(const Rational& c, const SuperPoly1& a);
    friend SuperPoly1 operator*(const SuperPoly1& a, const SuperPoly1& b);
    friend bool operator==(const SuperPoly1&, const SuperPoly1&) = default;

    SuperPoly1 dx() const;
    SuperPoly1 dxi() const;  // left derivative
    SuperPoly1 D() const;     // d_xi + xi d_x
    SuperPoly1 Dbar() const;  // d_xi - xi d_x
    std::string str() const;

private:
    std::map<Key, Rational> terms_;
};

// Basis x^k (even) then xi x^k (odd) for k in [kmin, kmax].  Module labels "x:k", "xi.x:k".
struct PolySuperModule {
    long kmin = 0, kmax = 0;

    std::size_t block() const { return static_cast<std::size_t>(kmax - kmin + 1); }
    std::size_t dim() const { return 2 * block(); }
    bool contains(long k) const { return kmin <= k && k <= kmax; }
    std::size_t index(long k, int e) const;
    Label label(std::size_t i) const;
    SuperPoly1 element(std::size_t i) const;
};

// Operator on a (possibly windowed) graded space; valid[j] is false when the image of
// basis vector j was not representable (left the window).  Identities are compared on
// valid columns only.
struct WOp {
    int parity = 0;
    RatMatrix m;
    std::vector<bool> valid;

    std::size_t dim() const { return m.cols(); }
    static WOp zero(std::size_t dim, int parity);
    static WOp identity(std::size_t dim);
    static WOp from_matrix(const RatMatrix& m, int parity);
    bool all_valid() const;
};

WOp compose(const WOp& a, const WOp& b);
WOp operator+(const WOp& a, const WOp& b);
WOp operator-(const WOp& a, const WOp& b);
WOp operator*(const Rational& c, const WOp& a);
// ]X,Y[ = XY + (-1)^{p(X)p(Y)} YX
WOp anticommutator(const WOp& x, const WOp& y);
// [X,Y] = XY - (-1)^{p(X)p(Y)} YX
WOp supercommutator(const WOp& x, const WOp& y);
// Columns valid in both where they differ.
std::vector<std::size_t> differing_columns(const WOp& a, const WOp& b);
std::size_t common_valid_columns(const WOp& a, const WOp& b);

// Operator f |-> op(f) on the polynomial module.
WOp poly_operator(const PolySuperModule& mod, const std::function<SuperPoly1(const SuperPoly1&)>& op, int parity);

// Representation: chi is defined on every label of the algebra (family algebras: lazily);
// `labels` are the generators whose pairs are checked.
struct MatrixRep {
    std::string name;
    AlgebraTable algebra;
    std::vector<Label> labels;
    std::function<WOp(const Label&)> chi;
    std::function<Label(std::size_t)> module_label;
    std::size_t dim = 0;

    WOp operator()(const GradedVector& v) const;
};

MatrixRep finite_rep(std::string name, const AlgebraTable& a, std::map<Label, RatMatrix> chi, std::size_t d0,
                     std::size_t d1);
// chi(x) = 0 for all x on a d0|d1 space.
MatrixRep zero_rep(const AlgebraTable& a, std::size_t d0, std::size_t d1);

// ]chi_x, chi_y[ = chi_{]x,y[} for all pairs of generators, on interior columns.
Report check_rep(const MatrixRep& r);
// [X_x, X_y] = X_{[x,y]} (standard super-commutator) for superalgebra representations.
Report check_super_rep(const MatrixRep& r);

// chi'(x) = chi(phi(x)).
MatrixRep pullback(const MatrixRep& r, const AlgebraTable& src, const std::map<Label, GradedVector>& phi);

// (FRep): chi(l_i) = c_l x^{i+1/2} D, chi(e_n) = c_e xi x^n D on AK(1) with the given
// odd-odd sign; generators with |index| <= n, polynomial window [-k, k].
MatrixRep build_FRep(long n, long k, const Rational& c_l, const Rational& c_e, int odd_sign);
// Calibrated constants from conventions().
MatrixRep build_FRep(long n, long k);

struct FRepCalibration {
    struct Trial {
        Rational c_l, c_e;
        int odd_sign;
        bool passed;
    };
    std::vector<Trial> trials;
    std::vector<Trial> passing;
    std::size_t orbits = 0;  // passing tuples modulo y -> -y (c_l -> -c_l)
    std::optional<Trial> chosen;
};
// Exhaustive search over (c_l, c_e) in {+-1, +-1/2}^2 and both odd-odd signs.
FRepCalibration calibrate_frep(long n, long k);

// (systemrep2) relations and the ghost Casimir.
struct Asl2Operators {
    WOp E, A, B;
};
// E = 2 chi(eps), A = 2 chi(a), B = 2 chi(b) for a representation of asl(2).
Asl2Operators asl2_operators(const MatrixRep& r);
Report check_asl2_rep(const Asl2Operators& s);
WOp ghost_casimir(const WOp& a, const WOp& b);
// Gamma^2 = Id/4 on every column where the four relations hold (and everything is valid).
Report check_ghost_casimir(const Asl2Operators& s);

struct Certificate {
    bool precondition = false;
    std::vector<std::pair<std::string, bool>> steps;
    bool passed = false;
    std::string failure;
};
// trace(E) = trace(AB - BA) = 0, E^2 = E => rank E = trace E = 0 => E = 0 => A = AE + EA = 0, B = 0.
Certificate finite_triviality_certificate(const RatMatrix& e, const RatMatrix& a, const RatMatrix& b,
                                          std::size_t d0, std::size_t d1);

struct FuzzResult {
    std::size_t candidates = 0;
    std::size_t exact_solutions = 0;
    std::size_t nonzero_solutions = 0;
    bool all_certified = true;
};
// 1|1: exhaustive over entries in {-1,0,1}.  Larger: `tries` random sparse candidates.
FuzzResult fuzz_triviality(std::size_t d0, std::size_t d1, std::size_t tries, std::uint64_t seed);

// Theorem 5: X_{a(.)b} = chi_a chi_b + chi_b chi_a on the superization, odd elements by chi.
MatrixRep extend_to_super(const MatrixRep& r);
// Relation rows of the symmetric square must act by zero.
Report extension_well_definedness(const MatrixRep& r);

// AK(1) -> K(1) bridge: X(xi_i) = alpha chi(l_i), X(x_n) = (alpha^2/2)(chi(l_i)chi(l_j)+chi(l_j)chi(l_i))
// with i + j = n.  Generators |index| <= n of K(1).
MatrixRep k1_bridge(const MatrixRep& frep, long n, const Rational& alpha);
// Independence of X(x_n) from the split i + j = n.
Report k1_bridge_well_definedness(const MatrixRep& frep, long n);
struct BridgeCalibration {
    std::vector<std::pair<Rational, bool>> trials;
    std::optional<Rational> chosen;
};
BridgeCalibration calibrate_k1_bridge(const MatrixRep& frep, long n);

// Contact vector fields.  literal: h d_x + 2 D(h) D.
// calibrated: h d_x + s D(h) D' (D' = Dbar if dbar) with conventions().
enum class ContactMode { literal, calibrated };
WOp contact_field(const PolySuperModule& mod, const SuperPoly1& h, ContactMode mode = ContactMode::calibrated);
WOp contact_field(const PolySuperModule& mod, const SuperPoly1& h, const Rational& s, bool dbar);
// x_n -> X_{x^{n+1}}, xi_i -> X_{c xi x^{i+1/2}}, checked against (CAlgRel) for |index| <= n.
Report check_contact_K1(long n, long k, const Rational& s, bool dbar, const Rational& c);
struct ContactCalibration {
    struct Trial {
        Rational s;
        bool dbar;
        Rational c;
        bool passed;
    };
    std::vector<Trial> trials;
    std::vector<Trial> passing;
    std::optional<Trial> chosen;  // modulo xi -> -xi (c -> -c)
};
ContactCalibration calibrate_contact(long n, long k);

}  // namespace antialg
