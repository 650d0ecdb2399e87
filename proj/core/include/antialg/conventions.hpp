#pragma once

#include "antialg/rational.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace antialg {

// Sign/scalar choices that the calibration harnesses select.  The defaults are the
// calibrated values; a JSON file named by ANTIALG_CONVENTIONS may pin them explicitly.
struct Conventions {
    // superization: factor in front of the four-term symmetrization
    Rational sym_normalization = Rational(1, 2);
    std::string sym_normalization_name = "half";
    // FRep: chi(l_i) = c_l x^{i+1/2} D, chi(e_n) = c_e xi x^n D on AK(1) with odd-odd sign
    Rational frep_c_l = Rational(1, 2);
    Rational frep_c_e = Rational(1, 2);
    int frep_odd_sign = -1;
    // contact fields X_h = h d_x + s D(h) D', D' = D or Dbar; odd Hamiltonians scaled by c
    Rational contact_s = Rational(1, 2);
    bool contact_dbar = true;
    Rational contact_odd_scale = 2;
    // geometry contraction <X^Y, dF^dG>: global sign, Koszul exponent selector,
    // symmetric tau^tau rule, coefficient placement sign
    int geo_sign = -1;
    int geo_koszul = 1;  // 0: none, 1: pF pG, 2: pX pY, 3: pX pY + pF pG
    bool geo_tau_symmetric = false;
    bool geo_coeff_sign = false;
    // coadjoint module twist: "twisted" | "untwisted" | "lie"
    std::string coadjoint = "twisted";

    nlohmann::json to_json() const;
    static Conventions from_json(const nlohmann::json& j);
};

// Process-wide conventions: defaults, overridden by ANTIALG_CONVENTIONS if set.
const Conventions& conventions();

}  // namespace antialg
