#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ellevel/laurent.hpp"
#include "ellevel/poly.hpp"
#include "ellevel/weierstrass.hpp"

namespace ellevel
{

/// Invariants of the curve Q^2 = 4 P^3 - g2 P - g3 that a WPoly lives over.
struct WInvariants {
    MultiPoly g2;
    MultiPoly g3;

    MultiPoly cubic_at(const MultiPoly &p) const;
};

using WInvariantsPtr = std::shared_ptr<const WInvariants>;

WInvariantsPtr make_invariants(const MultiPoly &g2, const MultiPoly &g3);

/// (deg_P, deg_Q) -> coefficient, before reduction.
using WTerms = std::map<std::pair<unsigned, unsigned>, MultiPoly>;

/// Element of Q[params][P, Q] / (Q^2 - 4P^3 + g2 P + g3) in the canonical form
/// a(P) + Q b(P), where P stands for wp(x) and Q for wp'(x).
class WPoly
{
public:
    explicit WPoly(WInvariantsPtr inv);

    static WPoly constant(WInvariantsPtr inv, const MultiPoly &c);
    static WPoly P(WInvariantsPtr inv);
    static WPoly Q(WInvariantsPtr inv);
    /// Rewrites Q^(2k+e) as R(P)^k Q^e with R(P) = 4P^3 - g2 P - g3.
    static WPoly wreduce(WInvariantsPtr inv, const WTerms &terms);

    const WInvariantsPtr &invariants() const { return m_inv; }
    /// Coefficients of P^i without Q.
    const std::vector<MultiPoly> &even_part() const { return m_even; }
    /// Coefficients of Q P^i.
    const std::vector<MultiPoly> &odd_part() const { return m_odd; }
    WTerms terms() const;
    MultiPoly coeff(unsigned deg_p, unsigned deg_q) const;

    bool is_zero() const { return m_even.empty() && m_odd.empty(); }
    /// True when both operands live over the same invariants.
    bool compatible(const WPoly &o) const;
    /// Degree in P counting Q as 3/2: max(2 deg a, 2 deg b + 3), or -1 for zero.
    int weight() const;

    WPoly &operator+=(const WPoly &o);
    WPoly &operator-=(const WPoly &o);
    friend WPoly operator+(WPoly a, const WPoly &b) { return a += b; }
    friend WPoly operator-(WPoly a, const WPoly &b) { return a -= b; }
    friend WPoly operator-(const WPoly &a);
    friend WPoly operator*(const WPoly &a, const WPoly &b);
    friend WPoly operator*(const WPoly &a, const MultiPoly &c);
    friend WPoly operator*(const MultiPoly &c, const WPoly &a) { return a * c; }
    friend bool operator==(const WPoly &a, const WPoly &b);

    WPoly map_coeffs(const std::function<MultiPoly(const MultiPoly &)> &fn) const;

private:
    void trim();
    void check_compatible(const WPoly &o) const;

    WInvariantsPtr m_inv;
    std::vector<MultiPoly> m_even;
    std::vector<MultiPoly> m_odd;
};

WPoly pow(const WPoly &p, unsigned e);

/// d/dx with dP = Q, dQ = 6P^2 - g2/2.
WPoly derivative(const WPoly &p);

std::string to_string(const WPoly &p);

/// Fraction of reduced WPolys. No common factors are removed; a/b == c/d means a d - c b reduces to zero.
class WRational
{
public:
    WRational(WPoly num, WPoly den);
    explicit WRational(const WPoly &p);

    const WPoly &num() const { return m_num; }
    const WPoly &den() const { return m_den; }
    bool is_zero() const { return m_num.is_zero(); }

    friend WRational operator+(const WRational &a, const WRational &b);
    friend WRational operator-(const WRational &a, const WRational &b);
    friend WRational operator-(const WRational &a);
    friend WRational operator*(const WRational &a, const WRational &b);
    /// Throws std::domain_error when b is zero.
    friend WRational operator/(const WRational &a, const WRational &b);
    friend bool operator==(const WRational &a, const WRational &b);

private:
    WPoly m_num;
    WPoly m_den;
};

enum class WOp { add, sub, mul, div };

WRational wrat_arith(WOp op, const WRational &a, const WRational &b);
WRational wrat_derivative(const WRational &a);

/// Laurent expansion of p at x = 0 with P, Q replaced by the wp, wp' series of ctx.
/// The context must carry the same invariants; it is rebuilt at a higher order when needed.
LaurentSeries wpoly_laurent_expand(const WPoly &p, const WeierstrassContext &ctx, int order);
/// Same for unreduced terms, without applying the curve relation first.
LaurentSeries wterms_laurent_expand(const WTerms &terms, const WeierstrassContext &ctx, int order);
/// num/den expanded exactly through x^order. Throws SeriesError for a zero denominator.
LaurentSeries wrat_laurent_expand(const WRational &a, const WeierstrassContext &ctx, int order);

enum class ClosedFormId { level2_ex1, level2_ex1_alt, level2_ex2, level2_ex3, level3, level4 };

/// "2-ex1", "2-ex1-alt", "2-ex2", "2-ex3", "3", "4".
std::string closed_form_name(ClosedFormId id);
ClosedFormId parse_closed_form(const std::string &text);
const std::vector<ClosedFormId> &all_closed_forms();

struct ClosedForm {
    ClosedFormId id;
    WRational f;
    /// Hard-coded parameter relations of the expression (c1..c4, c, ...), for display.
    std::vector<std::pair<std::string, MultiPoly>> parameters;
};

/// The elliptic function of the given level written over wp, wp' with its invariants bound.
///   4:       (alpha (4P + 3a^2 - b)(2P - a^2 + b)(4P - 7a^2 + 5b) - Q (4P + 3a^2 - b)^2) / (32 (P^4 + c1 P^3 + ...))
///   3:       -6 (P + alpha^2) / (3Q + 6 alpha P - (2 alpha^3 + gamma))
///   2-ex1:   -2 (P - c) / Q,  c = -a - b         2-ex1-alt: Q / (-2 (P - a)(P - b)), same invariants
///   2-ex2:   Q / (-2 (P - a)(P - b))
///   2-ex3:   -2 (P - a)(P - b) / (Q (P - c)),  c = 2b - a
ClosedForm closed_form(ClosedFormId id);

/// Coefficients through x^5 as printed for levels 2 (in delta, epsilon), 3 and 4.
LaurentSeries stated_level_series(int level);

/// Numerator over D^5 of f f''' - 3 f' f'' - C1 f'^2 - C2 f f' - C3 f^2 for f = N / D.
WPoly feq_numerator(const WRational &f, const MultiPoly &c1, const MultiPoly &c2, const MultiPoly &c3);
/// Numerator over D^12 of the End-equation residual for f = N / D.
WPoly end_numerator(const WRational &f, const MultiPoly &A1, const MultiPoly &B2);

struct AssertionResult {
    std::string assertion;
    bool exact_pass = false;  ///< reduced residual numerator is zero
    bool series_pass = false; ///< the residual also vanishes on the series expansion
    std::string residual;     ///< canonical text of the reduced residual ("0" on success)
    std::string detail;

    bool passed() const { return exact_pass && series_pass; }
};

/// "feq4", "series4", "end4", "ode3", "ode2". `order` is the series double-check order.
std::vector<AssertionResult> assertion_suite(const std::string &which, int order = 12);

const std::vector<std::string> &assertion_names();

} // namespace ellevel
