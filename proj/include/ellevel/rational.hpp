#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ellevel
{

/// Arbitrary-precision rational in canonical form: gcd(num, den) = 1, den > 0, zero is 0/1.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and arithmetic
/// result is canonicalized, so structural equality is numeric equality.
class BigRational
{
public:
    BigRational() = default;
    BigRational(long v) : m_value(v) {}
    BigRational(long num, long den);
    explicit BigRational(mpq_class v) : m_value(std::move(v)) { m_value.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
    static BigRational parse(std::string_view text);

    bool is_zero() const { return sgn(m_value) == 0; }
    bool is_one() const { return m_value == 1; }
    int sign() const { return sgn(m_value); }
    bool is_integer() const { return m_value.get_den() == 1; }

    BigRational abs() const { return BigRational(::abs(m_value)); }
    BigRational inverse() const;

    double to_double() const { return m_value.get_d(); }
    /// "p/q", or "p" when q == 1.
    std::string to_string() const;

    const mpq_class &raw() const { return m_value; }

    BigRational &operator+=(const BigRational &o) { m_value += o.m_value; return *this; }
    BigRational &operator-=(const BigRational &o) { m_value -= o.m_value; return *this; }
    BigRational &operator*=(const BigRational &o) { m_value *= o.m_value; return *this; }
    BigRational &operator/=(const BigRational &o);

    friend BigRational operator+(BigRational a, const BigRational &b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational &b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational &b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational &b) { return a /= b; }
    friend BigRational operator-(const BigRational &a) { return BigRational(mpq_class(-a.m_value)); }

    friend bool operator==(const BigRational &a, const BigRational &b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const BigRational &a, const BigRational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class m_value{0};
};

} // namespace ellevel
