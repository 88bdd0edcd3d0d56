#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ellevel/laurent.hpp"
#include "ellevel/poly.hpp"

namespace ellevel
{

inline constexpr std::size_t kMaxSeriesVars = 4;

/// Exponent vector of a multivariate series term; unused slots stay zero.
using SeriesExponent = std::array<std::uint8_t, kMaxSeriesVars>;

inline unsigned total_degree(const SeriesExponent &e)
{
    unsigned d = 0;
    for (auto x : e) {
        d += x;
    }
    return d;
}

/// Ascending total degree, then lexicographically descending (x1 first).
struct SeriesExponentOrder {
    bool operator()(const SeriesExponent &a, const SeriesExponent &b) const
    {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) {
            return da < db;
        }
        return a > b;
    }
};

/// Truncated power series in m <= 4 variables with MultiPoly coefficients.
///
/// `cap` is the largest total degree whose coefficients are known; kExact marks
/// a polynomial. Products are known through min(cap_a + val_b, cap_b + val_a).
class MultiSeries
{
public:
    using Terms = std::map<SeriesExponent, MultiPoly, SeriesExponentOrder>;

    explicit MultiSeries(std::size_t nvars = 1, int cap = kExact);

    static MultiSeries variable(std::size_t i, std::size_t nvars);
    static MultiSeries constant(const MultiPoly &c, std::size_t nvars, int cap = kExact);
    static MultiSeries term(const MultiPoly &c, const SeriesExponent &e, std::size_t nvars, int cap = kExact);

    std::size_t nvars() const { return m_nvars; }
    int cap() const { return m_cap; }
    bool is_exact() const { return m_cap >= kExact; }
    bool is_zero() const { return m_terms.empty(); }
    /// Lowest total degree present; cap + 1 for a truncated zero.
    int valuation() const;

    MultiPoly coeff(const SeriesExponent &e) const;
    const Terms &terms() const { return m_terms; }
    /// First nonzero term in ascending (degree, lex-descending) order.
    std::optional<std::pair<SeriesExponent, MultiPoly>> first_nonzero() const;

    MultiSeries truncated(int cap) const;
    MultiSeries map_coeffs(const std::function<MultiPoly(const MultiPoly &)> &fn) const;
    /// Variable i of the result is variable perm[i] of this series.
    MultiSeries permuted(std::span<const std::size_t> perm) const;
    /// Re-embeds into `nvars` variables; variable i goes to slot placement[i].
    MultiSeries embedded(std::size_t nvars, std::span<const std::size_t> placement) const;

    void add_term(const SeriesExponent &e, const MultiPoly &c);

    MultiSeries &operator+=(const MultiSeries &o);
    MultiSeries &operator-=(const MultiSeries &o);
    MultiSeries &operator*=(const MultiPoly &c);

    friend MultiSeries operator+(MultiSeries a, const MultiSeries &b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries &b) { return a -= b; }
    friend MultiSeries operator-(const MultiSeries &a);
    friend MultiSeries operator*(const MultiSeries &a, const MultiSeries &b);
    friend MultiSeries operator*(MultiSeries a, const MultiPoly &c) { return a *= c; }

    friend bool operator==(const MultiSeries &, const MultiSeries &) = default;

private:
    std::size_t m_nvars;
    int m_cap;
    Terms m_terms;
};

/// outer(inner) for a univariate power series outer and inner with zero constant term
/// (or any inner when outer is an exact polynomial).
MultiSeries compose(const LaurentSeries &outer, const MultiSeries &inner);

/// F(args[0], ..., args[m-1]); every argument must have zero constant term unless F is exact.
/// The result is computed only through total degree `result_cap`.
MultiSeries substitute_vars(const MultiSeries &f, std::span<const MultiSeries> args, int result_cap);

/// Restriction to the line x_i = dirs[i] * t.
LaurentSeries restrict_to_line(const MultiSeries &g, std::span<const BigRational> dirs);

std::complex<double> eval(const MultiSeries &g, const std::map<Symbol, std::complex<double>> &point,
                          std::span<const std::complex<double>> xs);

/// Bivariate series in (u, v); the formal-group carrier.
using BivariateSeries = MultiSeries;

} // namespace ellevel
