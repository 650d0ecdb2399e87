#pragma once

#include "antialg/algebra.hpp"
#include "antialg/catalog.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace antialg {

// Raised for malformed spec files; the message names the offending field or label.
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// AlgebraSpec (.alg.json):
//   {name, kind, even_basis, odd_basis, products: [{left, right, result: [{coeff, basis}]}],
//    family?: {rule_name: "AK1"|"K1", window: {min, max}}}
// Only one orientation of each product is stored; the other is stored only when it
// is not the companion implied by (super)symmetry.
nlohmann::json algebra_to_json(const AlgebraTable& a);
AlgebraTable algebra_from_json(const nlohmann::json& j);
AlgebraTable load_spec(const std::string& path);
void save_spec(const AlgebraTable& a, const std::string& path);

// ModuleSpec (.mod.json):
//   {name, algebra: <builtin name> | <AlgebraSpec>, even_basis, odd_basis,
//    rho: [{algebra_label, module_label, result}]}
nlohmann::json module_to_json(const AntiModule& m);
AntiModule module_from_json(const nlohmann::json& j);
AntiModule load_module(const std::string& path);
void save_module(const AntiModule& m, const std::string& path);

// Same kind, bases (in order) and products on every basis pair (family: on the window).
bool same_algebra(const AlgebraTable& a, const AlgebraTable& b);

}  // namespace antialg
