#include "antialg/algebra.hpp"

#include <stdexcept>

namespace antialg {

std::string to_string(AlgebraKind k)
{
    return k == AlgebraKind::antialgebra ? "antialgebra" : "superalgebra";
}

std::string Window::str() const
{
    return "[" + min.str() + ", " + max.str() + "]";
}

AlgebraTable AlgebraTable::finite(std::string name, AlgebraKind kind, std::vector<Label> even,
                                  std::vector<Label> odd, Table table, bool complete_by_symmetry)
{
    AlgebraTable a;
    a.name_ = std::move(name);
    a.kind_ = kind;
    a.even_ = std::move(even);
    a.odd_ = std::move(odd);
    for (const auto& l : a.even_)
        if (!a.parity_map_.emplace(l, 0).second)
            throw std::invalid_argument("duplicate basis label " + l.str());
    for (const auto& l : a.odd_)
        if (!a.parity_map_.emplace(l, 1).second)
            throw std::invalid_argument("duplicate basis label " + l.str());

    Table full;
    for (auto& [key, v] : table) {
        for (const Label* l : {&key.first, &key.second})
            if (!a.parity_map_.count(*l))
                throw std::invalid_argument("product references undeclared label " + l->str());
        for (const auto& [l, c] : v.terms())
            if (!a.parity_map_.count(l))
                throw std::invalid_argument("product result references undeclared label " + l.str());
        if (!v.is_zero())
            full[key] = v;
    }
    if (complete_by_symmetry) {
        for (const auto& [key, v] : Table(full)) {
            Key rev{key.second, key.first};
            if (table.count(rev))
                continue;
            int pp = a.parity_map_[key.first] * a.parity_map_[key.second];
            // antialgebra: ]y,x[ = (-1)^{pp} ]x,y[ ; superalgebra: [y,x] = -(-1)^{pp} [x,y]
            Rational s = kind == AlgebraKind::antialgebra ? Rational(sign_pow(pp)) : Rational(-sign_pow(pp));
            full[rev] = s * v;
        }
    }
    a.table_ = std::make_shared<const Table>(std::move(full));
    return a;
}

AlgebraTable AlgebraTable::family(std::string name, AlgebraKind kind, ParityRule parity, BasisRule basis,
                                  ProductRule rule, Window window, std::string rule_name)
{
    AlgebraTable a;
    a.name_ = std::move(name);
    a.kind_ = kind;
    a.family_ = true;
    a.parity_rule_ = std::move(parity);
    a.basis_rule_ = std::move(basis);
    a.rule_ = std::move(rule);
    a.window_ = window;
    a.rule_name_ = std::move(rule_name);
    return a;
}

std::vector<Label> AlgebraTable::even_basis() const
{
    return family_ ? basis_rule_(0, *window_) : even_;
}

std::vector<Label> AlgebraTable::odd_basis() const
{
    return family_ ? basis_rule_(1, *window_) : odd_;
}

std::vector<Label> AlgebraTable::basis() const
{
    auto b = even_basis();
    auto o = odd_basis();
    b.insert(b.end(), o.begin(), o.end());
    return b;
}

bool AlgebraTable::contains(const Label& l) const
{
    if (family_)
        return parity_rule_(l).has_value();
    return parity_map_.count(l) > 0;
}

int AlgebraTable::parity(const Label& l) const
{
    if (family_) {
        auto p = parity_rule_(l);
        if (!p)
            throw std::out_of_range("label " + l.str() + " is not in " + name_);
        return *p;
    }
    auto it = parity_map_.find(l);
    if (it == parity_map_.end())
        throw std::out_of_range("label " + l.str() + " is not in " + name_);
    return it->second;
}

ParityClass AlgebraTable::parity_of(const GradedVector& v) const
{
    bool seen_even = false, seen_odd = false;
    for (const auto& [l, c] : v.terms())
        (parity(l) ? seen_odd : seen_even) = true;
    if (seen_even && seen_odd)
        return ParityClass::mixed;
    return seen_odd ? ParityClass::odd : ParityClass::even;
}

GradedVector AlgebraTable::product(const Label& a, const Label& b) const
{
    if (!overrides_.empty()) {
        auto it = overrides_.find({a, b});
        if (it != overrides_.end())
            return it->second;
    }
    if (family_) {
        parity(a);
        parity(b);
        return rule_(a, b);
    }
    parity(a);
    parity(b);
    auto it = table_->find({a, b});
    return it == table_->end() ? GradedVector() : it->second;
}

GradedVector AlgebraTable::product(const GradedVector& u, const GradedVector& v) const
{
    GradedVector out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms())
            out.add(product(a, b), ca * cb);
    return out;
}

const AlgebraTable::Table& AlgebraTable::table() const
{
    if (family_ || !table_)
        throw std::logic_error("table() requested for family algebra " + name_);
    return *table_;
}

AlgebraTable AlgebraTable::with_window(const Window& w) const
{
    if (!family_)
        return *this;
    AlgebraTable a = *this;
    a.window_ = w;
    return a;
}

AlgebraTable AlgebraTable::renamed(std::string name) const
{
    AlgebraTable a = *this;
    a.name_ = std::move(name);
    return a;
}

AlgebraTable AlgebraTable::with_product(const Label& x, const Label& y, const GradedVector& value) const
{
    parity(x);
    parity(y);
    AlgebraTable a = *this;
    if (family_) {
        a.overrides_[{x, y}] = value;
        return a;
    }
    Table t = *table_;
    if (value.is_zero())
        t.erase({x, y});
    else
        t[{x, y}] = value;
    a.table_ = std::make_shared<const Table>(std::move(t));
    return a;
}

AlgebraTable AlgebraTable::with_rule(ProductRule rule, std::string name) const
{
    if (family_) {
        AlgebraTable a = *this;
        a.name_ = std::move(name);
        a.rule_ = std::move(rule);
        a.overrides_.clear();
        return a;
    }
    Table t;
    for (const auto& x : basis())
        for (const auto& y : basis()) {
            auto v = rule(x, y);
            if (!v.is_zero())
                t[{x, y}] = v;
        }
    return finite(std::move(name), kind_, even_, odd_, std::move(t), false);
}

}  // namespace antialg
