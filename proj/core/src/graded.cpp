#include "antialg/graded.hpp"

#include <sstream>
#include <stdexcept>

namespace antialg {

Label Label::parse(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty basis label");
    auto colon = text.rfind(':');
    if (colon != std::string_view::npos && colon + 1 < text.size() && colon > 0) {
        try {
            Rational idx = Rational::parse(text.substr(colon + 1));
            if (idx.denominator() > 2)
                throw std::invalid_argument("label index must be integer or half-integer: '" +
                                            std::string(text) + "'");
            return Label(std::string(text.substr(0, colon)), idx);
        }
        catch (const std::invalid_argument& e) {
            if (std::string(e.what()).rfind("label index", 0) == 0)
                throw;
        }
    }
    return Label(std::string(text));
}

std::string Label::str() const
{
    return index ? family + ":" + index->str() : family;
}

const Rational& Label::idx() const
{
    if (!index)
        throw std::logic_error("label '" + family + "' has no index");
    return *index;
}

Rational GradedVector::coeff(const Label& l) const
{
    auto it = terms_.find(l);
    return it == terms_.end() ? Rational(0) : it->second;
}

GradedVector& GradedVector::add(const Label& l, const Rational& c)
{
    if (c.is_zero())
        return *this;
    auto [it, inserted] = terms_.try_emplace(l, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
    return *this;
}

GradedVector& GradedVector::add(const GradedVector& v, const Rational& c)
{
    if (c.is_zero())
        return *this;
    for (const auto& [l, x] : v.terms_)
        add(l, x * c);
    return *this;
}

GradedVector& GradedVector::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [l, x] : terms_)
        x *= c;
    return *this;
}

std::string GradedVector::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms_) {
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        Rational a = c.sign() < 0 ? -c : c;
        if (a != Rational(1))
            os << a << "*";
        os << l.str();
        first = false;
    }
    return os.str();
}

}  // namespace antialg
