#pragma once

#include "antialg/graded.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace antialg {

struct Violation {
    std::string identity;
    std::vector<std::string> witness;
    GradedVector defect;
    std::string detail;  // optional free text, e.g. a matrix entry position
};

// Outcome of a verification: every violated identity with its witness and defect.
struct Report {
    std::string subject;
    std::string window;
    std::vector<std::string> checked;  // identity families that were evaluated
    std::size_t evaluations = 0;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
    std::vector<std::string> failing_identities() const;  // sorted, unique
    bool fails_only(const std::string& identity) const;
    const Violation* first(const std::string& identity) const;
    void merge(const Report& other);
    nlohmann::json to_json() const;
};

nlohmann::json vector_to_json(const GradedVector& v);
GradedVector vector_from_json(const nlohmann::json& j);

}  // namespace antialg
