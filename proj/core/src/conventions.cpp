#include "antialg/conventions.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace antialg {

using nlohmann::json;

json Conventions::to_json() const
{
    return {{"superization", {{"sym_normalization", sym_normalization.str()}, {"name", sym_normalization_name}}},
            {"frep",
             {{"c_l", frep_c_l.str()}, {"c_e", frep_c_e.str()}, {"odd_sign", frep_odd_sign}}},
            {"contact",
             {{"s", contact_s.str()}, {"dbar", contact_dbar}, {"odd_scale", contact_odd_scale.str()}}},
            {"geometry",
             {{"sign", geo_sign},
              {"koszul", geo_koszul},
              {"tau_symmetric", geo_tau_symmetric},
              {"coeff_sign", geo_coeff_sign}}},
            {"coadjoint", coadjoint}};
}

Conventions Conventions::from_json(const json& j)
{
    Conventions c;
    auto rat = [](const json& v) {
        return v.is_number_integer() ? Rational(v.get<long>()) : Rational::parse(v.get<std::string>());
    };
    if (j.contains("superization")) {
        const auto& s = j.at("superization");
        if (s.contains("sym_normalization"))
            c.sym_normalization = rat(s.at("sym_normalization"));
        c.sym_normalization_name = s.value("name", std::string("pinned"));
    }
    if (j.contains("frep")) {
        const auto& f = j.at("frep");
        if (f.contains("c_l"))
            c.frep_c_l = rat(f.at("c_l"));
        if (f.contains("c_e"))
            c.frep_c_e = rat(f.at("c_e"));
        c.frep_odd_sign = f.value("odd_sign", c.frep_odd_sign);
    }
    if (j.contains("contact")) {
        const auto& f = j.at("contact");
        if (f.contains("s"))
            c.contact_s = rat(f.at("s"));
        c.contact_dbar = f.value("dbar", c.contact_dbar);
        if (f.contains("odd_scale"))
            c.contact_odd_scale = rat(f.at("odd_scale"));
    }
    if (j.contains("geometry")) {
        const auto& g = j.at("geometry");
        c.geo_sign = g.value("sign", c.geo_sign);
        c.geo_koszul = g.value("koszul", c.geo_koszul);
        c.geo_tau_symmetric = g.value("tau_symmetric", c.geo_tau_symmetric);
        c.geo_coeff_sign = g.value("coeff_sign", c.geo_coeff_sign);
    }
    c.coadjoint = j.value("coadjoint", c.coadjoint);
    if (c.frep_odd_sign != 1 && c.frep_odd_sign != -1)
        throw std::invalid_argument("conventions: frep.odd_sign must be 1 or -1");
    if (c.geo_sign != 1 && c.geo_sign != -1)
        throw std::invalid_argument("conventions: geometry.sign must be 1 or -1");
    if (c.geo_koszul < 0 || c.geo_koszul > 3)
        throw std::invalid_argument("conventions: geometry.koszul must be 0..3");
    if (c.coadjoint != "twisted" && c.coadjoint != "untwisted" && c.coadjoint != "lie")
        throw std::invalid_argument("conventions: coadjoint must be twisted, untwisted or lie");
    return c;
}

const Conventions& conventions()
{
    static const Conventions c = [] {
        const char* path = std::getenv("ANTIALG_CONVENTIONS");
        if (!path || !*path)
            return Conventions{};
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error(std::string("ANTIALG_CONVENTIONS: cannot open ") + path);
        return Conventions::from_json(json::parse(in));
    }();
    return c;
}

}  // namespace antialg
