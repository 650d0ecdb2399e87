#include "antialg/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace antialg {

std::vector<std::string> Report::failing_identities() const
{
    std::vector<std::string> ids;
    for (const auto& v : violations)
        ids.push_back(v.identity);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool Report::fails_only(const std::string& identity) const
{
    auto ids = failing_identities();
    return ids.size() == 1 && ids.front() == identity;
}

const Violation* Report::first(const std::string& identity) const
{
    for (const auto& v : violations)
        if (v.identity == identity)
            return &v;
    return nullptr;
}

void Report::merge(const Report& other)
{
    for (const auto& c : other.checked)
        if (std::find(checked.begin(), checked.end(), c) == checked.end())
            checked.push_back(c);
    evaluations += other.evaluations;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

nlohmann::json vector_to_json(const GradedVector& v)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [l, c] : v.terms())
        out.push_back({{"coeff", c.str()}, {"basis", l.str()}});
    return out;
}

GradedVector vector_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("vector must be a JSON array of {coeff, basis}");
    GradedVector v;
    for (const auto& t : j) {
        if (!t.contains("coeff") || !t.contains("basis"))
            throw std::invalid_argument("vector term needs 'coeff' and 'basis'");
        const auto& c = t.at("coeff");
        Rational r = c.is_number_integer() ? Rational(c.get<long>()) : Rational::parse(c.get<std::string>());
        v.add(Label::parse(t.at("basis").get<std::string>()), r);
    }
    return v;
}

nlohmann::json Report::to_json() const
{
    nlohmann::json j;
    j["algebra"] = subject;
    j["window"] = window;
    j["checked"] = checked;
    j["evaluations"] = evaluations;
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : violations) {
        nlohmann::json e{{"identity", v.identity}, {"witness", v.witness}, {"defect", vector_to_json(v.defect)}};
        if (!v.detail.empty())
            e["detail"] = v.detail;
        vs.push_back(std::move(e));
    }
    j["violations"] = std::move(vs);
    j["passed"] = passed();
    return j;
}

}  // namespace antialg
