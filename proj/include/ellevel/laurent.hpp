#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ellevel/poly.hpp"

namespace ellevel
{

/// Truncation order carried by series that are known exactly (finite Laurent polynomials).
inline constexpr int kExact = 1 << 28;

constexpr int saturate_order(long long t) { return t >= kExact / 2 ? kExact : static_cast<int>(t); }

class SeriesError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Truncated Laurent series in one formal variable x over MultiPoly coefficients.
///
/// Coefficients of degrees above trunc() are unknown. Arithmetic propagates
/// truncation exactly: for a product the result is known through
/// min(N_f + val_g, N_g + val_f); sums take the smaller order.
class LaurentSeries
{
public:
    /// Exact zero.
    LaurentSeries() = default;

    static LaurentSeries zero(int trunc);
    static LaurentSeries constant(const MultiPoly &c, int trunc = kExact);
    static LaurentSeries monomial(const MultiPoly &c, int degree, int trunc = kExact);
    /// The variable x itself.
    static LaurentSeries variable(int trunc = kExact) { return monomial(MultiPoly(1), 1, trunc); }
    static LaurentSeries from_coeffs(int low, std::vector<MultiPoly> coeffs, int trunc);

    int trunc() const { return m_trunc; }
    bool is_exact() const { return m_trunc >= kExact; }
    /// Lowest degree with a nonzero coefficient; trunc() + 1 for a (truncated) zero.
    int valuation() const;
    int pole_order() const { return m_coeffs.empty() ? 0 : std::max(0, -m_low); }
    /// Highest stored nonzero degree (valuation() - 1 when empty).
    int high_degree() const { return m_low + static_cast<int>(m_coeffs.size()) - 1; }

    /// Coefficient of x^d. Throws SeriesError when d is beyond the truncation order.
    MultiPoly coeff(int d) const;
    MultiPoly leading_coeff() const;

    /// True when every known coefficient is zero.
    bool is_zero() const { return m_coeffs.empty(); }
    /// Lowest degree <= trunc() whose coefficient is nonzero.
    std::optional<int> first_nonzero() const;

    LaurentSeries truncated(int n) const;
    /// Multiplication by x^k.
    LaurentSeries shifted(int k) const;
    LaurentSeries map_coeffs(const std::function<MultiPoly(const MultiPoly &)> &fn) const;

    LaurentSeries &operator+=(const LaurentSeries &o);
    LaurentSeries &operator-=(const LaurentSeries &o);
    LaurentSeries &operator*=(const MultiPoly &c);

    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries &b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries &b) { return a -= b; }
    friend LaurentSeries operator-(const LaurentSeries &a);
    friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b);
    friend LaurentSeries operator*(LaurentSeries a, const MultiPoly &c) { return a *= c; }
    friend LaurentSeries operator*(const MultiPoly &c, LaurentSeries a) { return a *= c; }
    /// Requires the divisor's lowest coefficient to be a nonzero rational.
    friend LaurentSeries operator/(const LaurentSeries &a, const LaurentSeries &b);

    /// Structural equality: same truncation order and identical known coefficients.
    friend bool operator==(const LaurentSeries &, const LaurentSeries &) = default;

private:
    void trim();

    int m_low = 0;
    std::vector<MultiPoly> m_coeffs;
    int m_trunc = kExact;
};

LaurentSeries inverse(const LaurentSeries &g);
LaurentSeries pow(const LaurentSeries &f, unsigned e);

LaurentSeries derivative(const LaurentSeries &f);
/// Termwise antiderivative with zero constant term; the x^-1 coefficient must vanish.
LaurentSeries integrate(const LaurentSeries &f);

/// outer(inner). Outer must have no pole; if inner has a nonpositive valuation
/// the outer series must be an exact polynomial.
LaurentSeries compose(const LaurentSeries &outer, const LaurentSeries &inner);
/// Compositional inverse of f = x + O(x^2), by Lagrange inversion.
LaurentSeries reversion(const LaurentSeries &f);
/// exp(f) for f with no pole and zero constant term; f must be truncated.
LaurentSeries exp(const LaurentSeries &f);

/// True when all coefficients through degree n are known and zero.
bool vanishes_through(const LaurentSeries &f, int n);

/// Applies polynomial substitution to every coefficient.
LaurentSeries substitute(const LaurentSeries &f, const Bindings &bindings);

/// Evaluates the truncated series at x0 after binding every coefficient symbol.
/// Only meaningful for |x0| well inside the radius of convergence; near zero the
/// truncation error behaves like |x0|^(trunc+1).
std::complex<double> eval(const LaurentSeries &f, const std::map<Symbol, std::complex<double>> &point,
                          std::complex<double> x0);

} // namespace ellevel
