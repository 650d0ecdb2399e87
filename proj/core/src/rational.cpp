#include "antialg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace antialg {

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    text = trim(text);
    auto slash = text.find('/');
    std::string_view num = trim(text.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : trim(text.substr(slash + 1));
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+')
        n.erase(0, 1);
    mpz_class zn(n), zd{std::string(den)};
    if (zd == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    mpq_class q(zn, zd);
    q.canonicalize();
    return Rational(q);
}

long Rational::to_long() const
{
    if (!is_integer() || !q_.get_num().fits_slong_p())
        throw std::range_error("rational " + str() + " is not a machine integer");
    return q_.get_num().get_si();
}

std::string Rational::str() const
{
    return q_.get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

}  // namespace antialg
