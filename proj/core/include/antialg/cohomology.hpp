#pragma once

#include "antialg/algebra.hpp"
#include "antialg/catalog.hpp"
#include "antialg/matrix.hpp"
#include "antialg/report.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace antialg {

namespace identity {
inline constexpr const char* module_axioms = "Module";
inline constexpr const char* d2 = "d^2";
inline constexpr const char* d10_sq = "d10^2";
inline constexpr const char* dm12_sq = "d-12^2";
inline constexpr const char* d10_dm12 = "d10.d-12+d-12.d10";
inline constexpr const char* d01_zero = "d01=0";
inline constexpr const char* cocycle = "Cocycle";
}  // namespace identity

// Module axioms: the semidirect sum passes check_antialgebra.
Report check_module(const AntiModule& m);

// phi(x_1..x_p; y_1..y_q) with values in the module: arbitrary in the x slots (even
// elements), alternating in the y slots (odd elements).
struct Cochain {
    // ys arrive sorted and pairwise distinct
    using Fn = std::function<GradedVector(const std::vector<Label>& xs, const std::vector<Label>& ys)>;
    int p = 0, q = 0;
    Fn fn;

    // Sorts ys with the permutation sign; repeated ys give 0.
    GradedVector operator()(const std::vector<Label>& xs, std::vector<Label> ys) const;
    // Multilinear extension.
    GradedVector eval(const std::vector<GradedVector>& xs, const std::vector<GradedVector>& ys) const;
};

Cochain zero_cochain(int p, int q);
Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator*(const Rational& c, const Cochain& a);

// Basis element: the cochain sending (xs; ys) to out and every other basis tuple to 0.
struct CochainKey {
    int p = 0, q = 0;
    std::vector<Label> xs, ys;  // ys strictly increasing
    Label out;
    std::string str() const;
    friend bool operator==(const CochainKey&, const CochainKey&) = default;
};
Cochain basis_cochain(const CochainKey& k);

// Argument tuples of C^{p,q} over the algebra's (windowed) basis.
std::vector<std::pair<std::vector<Label>, std::vector<Label>>> argument_tuples(const AlgebraTable& a, int p, int q);
std::vector<CochainKey> cochain_basis(const AntiModule& m, int p, int q);
std::vector<CochainKey> cochain_basis(const AntiModule& m, int k);  // C^k, p descending
// (dim A_0)^p binom(dim A_1, q) dim B
std::size_t cochain_dim(const AntiModule& m, int p, int q);

enum class CochainParityRule { q_plus_output, pq_plus_output };
int cochain_parity(const CochainKey& k, const AntiModule& m,
                   CochainParityRule rule = CochainParityRule::q_plus_output);

struct DeltaOptions {
    bool printed = false;        // the operator exactly as displayed, without the module-term corrections
    bool drop_q_weight = false;  // mutation: remove the 1/q in the last sum of delta_{1,0}
};

Cochain delta10(const Cochain& phi, const AntiModule& m, const DeltaOptions& o = {});
Cochain delta01(const Cochain& phi, const AntiModule& m, const DeltaOptions& o = {});
Cochain delta_m12(const Cochain& phi, const AntiModule& m, const DeltaOptions& o = {});

// Cochain of total degree k as its (p, q) components, keyed by p.
using TotalCochain = std::map<int, Cochain>;
TotalCochain coboundary(const TotalCochain& phi, const AntiModule& m, const DeltaOptions& o = {});
TotalCochain total_from_vector(const AntiModule& m, int k, const RatVector& v);

// Matrix of delta^k on the bases cochain_basis(m, k) -> cochain_basis(m, k + 1) (finite algebras).
RatMatrix delta_matrix(const AntiModule& m, int k, const DeltaOptions& o = {});

// Evaluates every component of phi on all argument tuples of the (windowed) basis.
Report cochain_report(const TotalCochain& phi, const AntiModule& m, const char* id, const std::string& subject);

// delta^{k+1} delta^k = 0 on every basis cochain of degree k <= k_max, evaluated on all
// argument tuples (windowed for family algebras; exact because cochains are evaluated lazily).
Report verify_d2(const AntiModule& m, int k_max, const DeltaOptions& o = {});
// Trivial coefficients: d10^2 = 0, d-12^2 = 0, d10 d-12 + d-12 d10 = 0, d01 = 0.
Report bicomplex_check(const AntiModule& trivial, int k_max);
Report bicomplex_check(const AlgebraTable& a, int k_max);

// Whether delta^k (k <= k_max) maps each parity sector into itself.
bool preserves_parity(const AntiModule& m, int k_max, CochainParityRule rule, const DeltaOptions& o = {});
CochainParityRule calibrate_cochain_parity(const AntiModule& m, int k_max);

struct CohomologyDims {
    long even = 0, odd = 0;
};
// H^k = ker delta^k / im delta^{k-1}, per parity sector.  Throws std::logic_error if delta
// does not preserve parity.
CohomologyDims cohomology_dims(const AntiModule& m, int k, const DeltaOptions& o = {});
// Kernel basis of delta^k restricted to one parity sector, as coordinate vectors on cochain_basis(m, k).
std::vector<RatVector> cocycle_basis(const AntiModule& m, int k, int parity, const DeltaOptions& o = {});

// rho~_a(b, lambda) = (rho_a b + lambda c(a), 0) on B + K (new even label "lam").
struct ModuleExtension {
    AntiModule module;
    Report module_check;
    Report cocycle;                         // delta c, reported separately
    std::optional<GradedVector> splitting;  // v with c(a) = rho_a v: lam - v spans a trivial summand
};
ModuleExtension extend_module(const AntiModule& m, const TotalCochain& c, const DeltaOptions& o = {});

// ](a,b),(a',b')[ = (]a,a'[, Omega(a,a')) with Omega = 2 w_{2,0} on even pairs,
// w_{1,1} on mixed pairs (both orders), w_{0,2} on odd pairs.  B must be a trivial module.
AlgebraTable extension_algebra(const AntiModule& trivial, const TotalCochain& omega);
// eta with Omega(a,a') + eta(]a,a'[) = 0: then (a,b) -> (a, b + eta(a)) splits the extension.
std::optional<std::map<Label, GradedVector>> extension_splitting(const AntiModule& trivial,
                                                                 const TotalCochain& omega);

// gamma(e_n) = -n e*_{-n}, gamma(l_i) = sign (i^2 - 1/4) l*_{-i}.
TotalCochain gamma_cochain(const Rational& sign = 1);
struct GammaResult {
    long window = 0;
    int pairing_sign = 0;  // the dual-pairing sign that closed; 0 if neither did
    Report cocycle;        // delta gamma on the window (for the sign tried last)
    bool coboundary_found = false;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
};
// On AK(1) with the twisted coadjoint module; non-triviality is checked only against
// 0-cochains supported on the window.
GammaResult verify_gamma(long window, const DeltaOptions& o = {});

}  // namespace antialg
