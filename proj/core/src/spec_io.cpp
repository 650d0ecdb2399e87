#include "antialg/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace antialg {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw SpecError(where + ": missing field '" + key + "'");
    return j.at(key);
}

std::string get_string(const json& j, const char* key, const std::string& where)
{
    const json& v = field(j, key, where);
    if (!v.is_string())
        throw SpecError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

Label parse_label(const json& v, const std::string& where)
{
    if (!v.is_string())
        throw SpecError(where + ": basis label must be a string");
    try {
        return Label::parse(v.get<std::string>());
    }
    catch (const std::invalid_argument& e) {
        throw SpecError(where + ": bad label '" + v.get<std::string>() + "': " + e.what());
    }
}

std::vector<Label> parse_labels(const json& j, const char* key, const std::string& where)
{
    const json& arr = field(j, key, where);
    if (!arr.is_array())
        throw SpecError(where + ": field '" + key + "' must be an array");
    std::vector<Label> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(parse_label(arr[i], where + "." + key + "[" + std::to_string(i) + "]"));
    return out;
}

Rational parse_coeff(const json& c, const std::string& where)
{
    try {
        if (c.is_number_integer())
            return Rational(c.get<long>());
        if (c.is_string())
            return Rational::parse(c.get<std::string>());
    }
    catch (const std::invalid_argument&) {
    }
    throw SpecError(where + ": coefficient " + c.dump() + " is not an exact rational");
}

// Result vector; every label must satisfy `known`.
template <class Known>
GradedVector parse_result(const json& arr, const std::string& where, Known known)
{
    if (!arr.is_array())
        throw SpecError(where + ": result must be an array of {coeff, basis}");
    GradedVector v;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string w = where + "[" + std::to_string(i) + "]";
        Label l = parse_label(field(arr[i], "basis", w), w + ".basis");
        if (!known(l))
            throw SpecError(w + ": undeclared basis label '" + l.str() + "'");
        v.add(l, parse_coeff(field(arr[i], "coeff", w), w + ".coeff"));
    }
    return v;
}

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw SpecError("cannot open " + path);
    try {
        return json::parse(in);
    }
    catch (const json::parse_error& e) {
        throw SpecError(path + ": malformed JSON: " + e.what());
    }
}

void write_json(const json& j, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw SpecError("cannot write " + path);
    out << j.dump(2) << "\n";
}

json labels_json(const std::vector<Label>& ls)
{
    json a = json::array();
    for (const auto& l : ls)
        a.push_back(l.str());
    return a;
}

}  // namespace

json algebra_to_json(const AlgebraTable& a)
{
    json j;
    j["name"] = a.name();
    j["kind"] = to_string(a.kind());
    j["even_basis"] = labels_json(a.even_basis());
    j["odd_basis"] = labels_json(a.odd_basis());
    json prods = json::array();
    if (a.is_family()) {
        j["family"] = {{"rule_name", a.rule_name()},
                       {"window", {{"min", a.window()->min.str()}, {"max", a.window()->max.str()}}}};
        j["products"] = prods;
        return j;
    }
    auto basis = a.basis();
    auto emit = [&](const Label& x, const Label& y, const GradedVector& v) {
        prods.push_back({{"left", x.str()}, {"right", y.str()}, {"result", vector_to_json(v)}});
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t k = i; k < basis.size(); ++k) {
            const Label &x = basis[i], &y = basis[k];
            GradedVector xy = a.product(x, y), yx = a.product(y, x);
            int pp = a.parity(x) * a.parity(y);
            Rational s = a.kind() == AlgebraKind::antialgebra ? Rational(sign_pow(pp)) : Rational(-sign_pow(pp));
            bool companion_ok = yx == s * xy;
            if (!xy.is_zero() || (i != k && !companion_ok))
                emit(x, y, xy);
            if (i != k && !companion_ok)
                emit(y, x, yx);
        }
    j["products"] = prods;
    return j;
}

AlgebraTable algebra_from_json(const json& j)
{
    const std::string where = "algebra";
    std::string name = get_string(j, "name", where);
    std::string kind_s = get_string(j, "kind", where);
    AlgebraKind kind;
    if (kind_s == "antialgebra")
        kind = AlgebraKind::antialgebra;
    else if (kind_s == "superalgebra")
        kind = AlgebraKind::superalgebra;
    else
        throw SpecError(where + ": field 'kind' must be antialgebra or superalgebra, got '" + kind_s + "'");

    if (j.contains("family") && !j.at("family").is_null()) {
        const json& f = j.at("family");
        std::string rule = get_string(f, "rule_name", "family");
        const json& w = field(f, "window", "family");
        Window win{parse_coeff(field(w, "min", "family.window"), "family.window.min"),
                   parse_coeff(field(w, "max", "family.window"), "family.window.max")};
        if (rule == "AK1")
            return build_AK1(win).renamed(name);
        if (rule == "K1")
            return build_K1(win).renamed(name);
        throw SpecError("family: unknown rule_name '" + rule + "' (expected AK1 or K1)");
    }

    auto even = parse_labels(j, "even_basis", where);
    auto odd = parse_labels(j, "odd_basis", where);
    std::map<Label, int> declared;
    for (const auto& l : even)
        declared[l] = 0;
    for (const auto& l : odd)
        if (!declared.emplace(l, 1).second)
            throw SpecError(where + ": label '" + l.str() + "' declared twice");
    auto known = [&](const Label& l) { return declared.count(l) > 0; };

    AlgebraTable::Table table;
    const json& prods = field(j, "products", where);
    if (!prods.is_array())
        throw SpecError(where + ": field 'products' must be an array");
    for (std::size_t i = 0; i < prods.size(); ++i) {
        std::string w = "products[" + std::to_string(i) + "]";
        Label x = parse_label(field(prods[i], "left", w), w + ".left");
        Label y = parse_label(field(prods[i], "right", w), w + ".right");
        for (const Label* l : {&x, &y})
            if (!known(*l))
                throw SpecError(w + ": undeclared basis label '" + l->str() + "'");
        GradedVector v = parse_result(field(prods[i], "result", w), w + ".result", known);
        for (const auto& [l, c] : v.terms())
            if (declared[l] != parity_add(declared[x], declared[y]))
                throw SpecError(w + ": product " + x.str() + "*" + y.str() + " does not preserve parity at '" +
                                l.str() + "'");
        if (table.count({x, y}))
            throw SpecError(w + ": duplicate product entry " + x.str() + "*" + y.str());
        table[{x, y}] = v;
    }
    return AlgebraTable::finite(name, kind, even, odd, table, true);
}

AlgebraTable load_spec(const std::string& path)
{
    json j = read_json(path);
    try {
        return algebra_from_json(j);
    }
    catch (const SpecError& e) {
        throw SpecError(path + ": " + e.what());
    }
}

void save_spec(const AlgebraTable& a, const std::string& path)
{
    write_json(algebra_to_json(a), path);
}

json module_to_json(const AntiModule& m)
{
    if (m.algebra.is_family())
        throw SpecError("module over a family algebra cannot be serialized as a table");
    json j;
    j["name"] = m.name;
    j["algebra"] = algebra_to_json(m.algebra);
    j["even_basis"] = labels_json(m.even_basis);
    j["odd_basis"] = labels_json(m.odd_basis);
    json rho = json::array();
    for (const auto& a : m.algebra.basis())
        for (const auto& b : m.basis()) {
            auto v = m.rho(a, b);
            if (!v.is_zero())
                rho.push_back({{"algebra_label", a.str()}, {"module_label", b.str()}, {"result", vector_to_json(v)}});
        }
    j["rho"] = rho;
    return j;
}

AntiModule module_from_json(const json& j)
{
    const std::string where = "module";
    std::string name = get_string(j, "name", where);
    const json& aj = field(j, "algebra", where);
    AlgebraTable a;
    if (aj.is_string()) {
        try {
            a = build_builtin(aj.get<std::string>());
        }
        catch (const std::invalid_argument& e) {
            throw SpecError(where + ".algebra: " + e.what());
        }
    }
    else {
        a = algebra_from_json(aj);
    }
    auto even = parse_labels(j, "even_basis", where);
    auto odd = parse_labels(j, "odd_basis", where);
    std::map<Label, int> declared;
    for (const auto& l : even)
        declared[l] = 0;
    for (const auto& l : odd)
        if (!declared.emplace(l, 1).second)
            throw SpecError(where + ": label '" + l.str() + "' declared twice");
    auto known = [&](const Label& l) { return declared.count(l) > 0; };

    std::map<std::pair<Label, Label>, GradedVector> rho;
    const json& rj = field(j, "rho", where);
    if (!rj.is_array())
        throw SpecError(where + ": field 'rho' must be an array");
    for (std::size_t i = 0; i < rj.size(); ++i) {
        std::string w = "rho[" + std::to_string(i) + "]";
        Label x = parse_label(field(rj[i], "algebra_label", w), w + ".algebra_label");
        Label b = parse_label(field(rj[i], "module_label", w), w + ".module_label");
        if (!a.contains(x))
            throw SpecError(w + ": undeclared algebra label '" + x.str() + "'");
        if (!known(b))
            throw SpecError(w + ": undeclared module label '" + b.str() + "'");
        GradedVector v = parse_result(field(rj[i], "result", w), w + ".result", known);
        for (const auto& [l, c] : v.terms())
            if (declared[l] != parity_add(a.parity(x), declared[b]))
                throw SpecError(w + ": rho does not preserve parity at '" + l.str() + "'");
        rho[{x, b}] = v;
    }
    return table_module(name, a, even, odd, rho);
}

AntiModule load_module(const std::string& path)
{
    json j = read_json(path);
    try {
        return module_from_json(j);
    }
    catch (const SpecError& e) {
        throw SpecError(path + ": " + e.what());
    }
}

void save_module(const AntiModule& m, const std::string& path)
{
    write_json(module_to_json(m), path);
}

bool same_algebra(const AlgebraTable& a, const AlgebraTable& b)
{
    if (a.kind() != b.kind() || a.even_basis() != b.even_basis() || a.odd_basis() != b.odd_basis())
        return false;
    auto basis = a.basis();
    for (const auto& x : basis)
        for (const auto& y : basis)
            if (a.product(x, y) != b.product(x, y))
                return false;
    return true;
}

}  // namespace antialg
