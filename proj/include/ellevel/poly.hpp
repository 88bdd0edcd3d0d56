#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellevel/rational.hpp"
#include "ellevel/symbol.hpp"

namespace ellevel
{

/// Exponent vector over the symbol universe with its total degree cached.
class Monomial
{
public:
    Monomial() = default;
    static Monomial of(Symbol s, unsigned e = 1);

    unsigned operator[](Symbol s) const { return m_exps[index(s)]; }
    unsigned degree() const { return m_degree; }
    bool is_one() const { return m_degree == 0; }

    Monomial operator*(const Monomial &o) const;
    /// True when every exponent of `o` is <= the matching exponent here.
    bool divisible_by(const Monomial &o) const;
    Monomial operator/(const Monomial &o) const;
    Monomial with(Symbol s, unsigned e) const;

    friend bool operator==(const Monomial &, const Monomial &) = default;

    /// Graded-lex comparison: true when `a` sorts before `b` in descending order.
    friend bool grlex_greater(const Monomial &a, const Monomial &b)
    {
        if (a.m_degree != b.m_degree) {
            return a.m_degree > b.m_degree;
        }
        return a.m_exps > b.m_exps;
    }

private:
    std::array<std::uint16_t, kSymbolCount> m_exps{};
    std::uint32_t m_degree = 0;
};

struct GrlexGreater {
    bool operator()(const Monomial &a, const Monomial &b) const { return grlex_greater(a, b); }
};

/// Sparse multivariate polynomial over BigRational in the fixed symbol universe.
///
/// Terms are kept sorted in graded-lex descending order with no zero
/// coefficients, so two polynomials are equal iff their term lists are.
class MultiPoly
{
public:
    using Term = std::pair<Monomial, BigRational>;

    MultiPoly() = default;
    MultiPoly(long c) : MultiPoly(BigRational(c)) {}
    MultiPoly(const BigRational &c);

    static MultiPoly symbol(Symbol s, unsigned e = 1);
    static MultiPoly term(const BigRational &c, const Monomial &m);
    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    static MultiPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return m_terms.empty(); }
    bool is_constant() const { return m_terms.empty() || (m_terms.size() == 1 && m_terms.front().first.is_one()); }
    /// Value when the polynomial is a constant.
    std::optional<BigRational> as_constant() const;
    BigRational constant_term() const;

    std::size_t size() const { return m_terms.size(); }
    const std::vector<Term> &terms() const { return m_terms; }
    unsigned total_degree() const { return m_terms.empty() ? 0 : m_terms.front().first.degree(); }
    unsigned degree_in(Symbol s) const;
    bool contains(Symbol s) const { return degree_in(s) > 0; }

    /// Coefficient of s^e, as a polynomial in the remaining symbols.
    MultiPoly coefficient_of(Symbol s, unsigned e) const;

    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o) { return *this = *this * o; }
    MultiPoly &operator*=(const BigRational &c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(MultiPoly a, const BigRational &c) { return a *= c; }
    friend MultiPoly operator*(const BigRational &c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(MultiPoly a);

    friend bool operator==(const MultiPoly &a, const MultiPoly &b) { return a.m_terms == b.m_terms; }

private:
    std::vector<Term> m_terms;
};

MultiPoly pow(const MultiPoly &p, unsigned e);

/// Collects many products and sums before a single canonicalizing sort.
class PolyAccumulator
{
public:
    void add(const MultiPoly &p) { m_buf.insert(m_buf.end(), p.terms().begin(), p.terms().end()); }
    void add_product(const MultiPoly &x, const MultiPoly &y);
    void add_product(const MultiPoly &x, const MultiPoly &y, const BigRational &scale);
    bool empty() const { return m_buf.empty(); }
    MultiPoly take() { return MultiPoly::from_terms(std::move(m_buf)); }

private:
    std::vector<MultiPoly::Term> m_buf;
};

/// Divides by a single term exactly; nullopt if some term is not divisible.
std::optional<MultiPoly> divide_by_term(const MultiPoly &p, const BigRational &c, const Monomial &m);

MultiPoly partial_derivative(const MultiPoly &p, Symbol s);

using Bindings = std::map<Symbol, MultiPoly>;

/// Simultaneous substitution of symbols by polynomials.
MultiPoly substitute(const MultiPoly &p, const Bindings &bindings);

/// Rewrites every occurrence of s^k as `replacement` until the degree in s is below k.
MultiPoly reduce_power(const MultiPoly &p, Symbol s, unsigned k, const MultiPoly &replacement);

/// Applies the derivation d with d(s) = images[s] (symbols absent from `images` are constants).
MultiPoly apply_derivation(const MultiPoly &p, const Bindings &images);

class UnboundSymbol : public std::invalid_argument
{
public:
    explicit UnboundSymbol(Symbol s)
        : std::invalid_argument("unbound symbol '" + std::string(name(s)) + "'"), m_symbol(s)
    {
    }
    Symbol symbol() const { return m_symbol; }

private:
    Symbol m_symbol;
};

BigRational eval(const MultiPoly &p, const std::map<Symbol, BigRational> &point);
std::complex<double> eval(const MultiPoly &p, const std::map<Symbol, std::complex<double>> &point);

/// Canonical text: graded-lex descending terms "c*sym^e*...", unit coefficients
/// omitted, joined with " + " / " - ". Zero prints as "0".
std::string to_string(const MultiPoly &p);

/// Parses canonical text and general expressions over the universe
/// (+, -, *, ^ with natural exponents, / by nonzero constants, parentheses).
MultiPoly parse_poly(std::string_view text);

} // namespace ellevel
