#include "ellevel/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ellevel
{

BigRational::BigRational(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("BigRational: zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

BigRational BigRational::parse(std::string_view text)
{
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char ch : s) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    std::string n(num);
    if (!n.empty() && n.front() == '+') {
        n.erase(0, 1);
    }
    mpz_class zn(n, 10);
    mpz_class zd(std::string(den), 10);
    if (zd == 0) {
        throw std::domain_error("BigRational: zero denominator in '" + std::string(text) + "'");
    }
    return BigRational(mpq_class(zn, zd));
}

BigRational BigRational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("BigRational: inverse of zero");
    }
    return BigRational(mpq_class(1 / m_value));
}

BigRational &BigRational::operator/=(const BigRational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("BigRational: division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

std::string BigRational::to_string() const
{
    if (m_value.get_den() == 1) {
        return m_value.get_num().get_str();
    }
    return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

} // namespace ellevel
