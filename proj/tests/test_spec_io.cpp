#include "antialg/axioms.hpp"
#include "antialg/catalog.hpp"
#include "antialg/spec_io.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>

using namespace antialg;
using nlohmann::json;

namespace {

const std::string fixtures = ANTIALG_FIXTURES;

json asl2_json()
{
    return json::parse(R"({
      "name": "t", "kind": "antialgebra", "even_basis": ["eps"], "odd_basis": ["a", "b"],
      "products": [
        {"left": "eps", "right": "eps", "result": [{"coeff": "1", "basis": "eps"}]},
        {"left": "eps", "right": "a", "result": [{"coeff": "1/2", "basis": "a"}]},
        {"left": "eps", "right": "b", "result": [{"coeff": "1/2", "basis": "b"}]},
        {"left": "a", "right": "b", "result": [{"coeff": "1/2", "basis": "eps"}]}]})");
}

}  // namespace

TEST(SpecIO, RoundTripFinite)
{
    for (const auto& a : {build_asl2(), build_ah1(1), build_ah1(Rational(-3, 7)), build_osp12()}) {
        const AlgebraTable b = algebra_from_json(json::parse(algebra_to_json(a).dump()));
        EXPECT_TRUE(same_algebra(a, b)) << a.name();
        EXPECT_EQ(algebra_to_json(a).dump(), algebra_to_json(b).dump());
    }
}

TEST(SpecIO, RoundTripFamily)
{
    for (const auto& a : {build_AK1(3), build_K1(2)}) {
        const AlgebraTable b = algebra_from_json(algebra_to_json(a));
        EXPECT_TRUE(same_algebra(a, b)) << a.name();
        EXPECT_TRUE(b.is_family());
    }
}

TEST(SpecIO, HandWrittenMatchesBuiltin)
{
    EXPECT_TRUE(same_algebra(algebra_from_json(asl2_json()), build_asl2()));
    EXPECT_TRUE(same_algebra(load_spec(fixtures + "/asl2.alg.json"), build_asl2()));
}

TEST(SpecIO, Errors)
{
    auto broken = [](auto edit) {
        json j = asl2_json();
        edit(j);
        return j;
    };
    EXPECT_THROW(algebra_from_json(broken([](json& j) { j["products"][0]["left"] = "zz"; })), SpecError);
    EXPECT_THROW(algebra_from_json(broken([](json& j) { j["products"][0]["result"][0]["coeff"] = "1/0"; })),
                 SpecError);
    EXPECT_THROW(algebra_from_json(broken([](json& j) { j["products"][0]["result"][0]["coeff"] = "x"; })), SpecError);
    EXPECT_THROW(algebra_from_json(broken([](json& j) { j["kind"] = "lie"; })), SpecError);
    EXPECT_THROW(algebra_from_json(broken([](json& j) { j["odd_basis"].push_back("eps"); })), SpecError);
    EXPECT_THROW(algebra_from_json(broken([](json& j) { j.erase("even_basis"); })), SpecError);
    // parity violation: ]eps,a[ = eps
    EXPECT_THROW(algebra_from_json(broken([](json& j) { j["products"][1]["result"][0]["basis"] = "eps"; })),
                 SpecError);
    EXPECT_THROW(load_spec(fixtures + "/missing.alg.json"), SpecError);
    EXPECT_THROW(load_spec(fixtures + "/malformed.alg.json"), SpecError);
}

TEST(SpecIO, BrokenFixtureFailsJack)
{
    const Report r = check_axioms(load_spec(fixtures + "/broken.alg.json"));
    EXPECT_TRUE(r.fails_only("Jack"));
    EXPECT_EQ(r.first("Jack")->witness.size(), 3u);
}

TEST(SpecIO, ModuleRoundTrip)
{
    const AntiModule m = adjoint_module(build_ah1(1));
    const AntiModule n = module_from_json(json::parse(module_to_json(m).dump()));
    EXPECT_EQ(module_to_json(m).dump(), module_to_json(n).dump());
    for (const auto& a : m.algebra.basis())
        for (const auto& b : m.basis())
            EXPECT_EQ(m.rho(a, b), n.rho(a, b));
}

TEST(SpecIO, ModuleFixture)
{
    const AntiModule f = load_module(fixtures + "/ah1_adjoint.mod.json");
    const AntiModule m = adjoint_module(build_ah1(0));
    ASSERT_EQ(f.basis(), m.basis());
    for (const auto& a : m.algebra.basis())
        for (const auto& b : m.basis())
            EXPECT_EQ(f.rho(a, b), m.rho(a, b)) << a << " " << b;
}

TEST(SpecIO, SaveAndLoad)
{
    const auto path = std::filesystem::temp_directory_path() / "antialg_spec_io_test.alg.json";
    save_spec(build_ah1(2), path.string());
    EXPECT_TRUE(same_algebra(load_spec(path.string()), build_ah1(2)));
    std::filesystem::remove(path);
}
