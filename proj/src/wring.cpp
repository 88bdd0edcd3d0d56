#include "ellevel/wring.hpp"

#include <algorithm>
#include <optional>
#include <tuple>
#include <stdexcept>

#include "ellevel/formalgroup.hpp"
#include "ellevel/krichever.hpp"

namespace ellevel
{

namespace
{

using Coeffs = std::vector<MultiPoly>;

Coeffs trimmed(Coeffs c)
{
    while (!c.empty() && c.back().is_zero()) {
        c.pop_back();
    }
    return c;
}

Coeffs add(const Coeffs &a, const Coeffs &b)
{
    Coeffs out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) {
            out[i] += a[i];
        }
        if (i < b.size()) {
            out[i] += b[i];
        }
    }
    return trimmed(std::move(out));
}

Coeffs mul(const Coeffs &a, const Coeffs &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<PolyAccumulator> acc(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j].is_zero()) {
                acc[i + j].add_product(a[i], b[j]);
            }
        }
    }
    Coeffs out;
    out.reserve(acc.size());
    for (auto &x : acc) {
        out.push_back(x.take());
    }
    return trimmed(std::move(out));
}

Coeffs scale(const Coeffs &a, const MultiPoly &c)
{
    Coeffs out;
    out.reserve(a.size());
    for (const auto &x : a) {
        out.push_back(x * c);
    }
    return trimmed(std::move(out));
}

Coeffs derivative_in_p(const Coeffs &a)
{
    Coeffs out;
    for (std::size_t i = 1; i < a.size(); ++i) {
        out.push_back(a[i] * BigRational(static_cast<long>(i)));
    }
    return trimmed(std::move(out));
}

/// 4P^3 - g2 P - g3
Coeffs cubic(const WInvariants &inv) { return trimmed({-inv.g3, -inv.g2, MultiPoly{}, MultiPoly(4)}); }

MultiPoly P_(const char *text) { return parse_poly(text); }

} // namespace

MultiPoly WInvariants::cubic_at(const MultiPoly &p) const { return MultiPoly(4) * pow(p, 3) - g2 * p - g3; }

WInvariantsPtr make_invariants(const MultiPoly &g2, const MultiPoly &g3)
{
    return std::make_shared<const WInvariants>(WInvariants{g2, g3});
}

WPoly::WPoly(WInvariantsPtr inv) : m_inv(std::move(inv))
{
    if (!m_inv) {
        throw std::invalid_argument("WPoly: missing invariants");
    }
}

WPoly WPoly::constant(WInvariantsPtr inv, const MultiPoly &c)
{
    WPoly p(std::move(inv));
    p.m_even = trimmed({c});
    return p;
}

WPoly WPoly::P(WInvariantsPtr inv)
{
    WPoly p(std::move(inv));
    p.m_even = {MultiPoly{}, MultiPoly(1)};
    return p;
}

WPoly WPoly::Q(WInvariantsPtr inv)
{
    WPoly p(std::move(inv));
    p.m_odd = {MultiPoly(1)};
    return p;
}

WPoly WPoly::wreduce(WInvariantsPtr inv, const WTerms &terms)
{
    WPoly out(inv);
    const Coeffs r = cubic(*inv);
    std::vector<Coeffs> r_powers{{MultiPoly(1)}};
    for (const auto &[deg, c] : terms) {
        const auto [dp, dq] = deg;
        while (r_powers.size() <= dq / 2) {
            r_powers.push_back(mul(r_powers.back(), r));
        }
        Coeffs shifted(dp, MultiPoly{});
        shifted.push_back(c);
        const Coeffs part = mul(r_powers[dq / 2], shifted);
        if (dq % 2 == 0) {
            out.m_even = add(out.m_even, part);
        } else {
            out.m_odd = add(out.m_odd, part);
        }
    }
    return out;
}

WTerms WPoly::terms() const
{
    WTerms out;
    for (std::size_t i = 0; i < m_even.size(); ++i) {
        if (!m_even[i].is_zero()) {
            out.emplace(std::make_pair(static_cast<unsigned>(i), 0U), m_even[i]);
        }
    }
    for (std::size_t i = 0; i < m_odd.size(); ++i) {
        if (!m_odd[i].is_zero()) {
            out.emplace(std::make_pair(static_cast<unsigned>(i), 1U), m_odd[i]);
        }
    }
    return out;
}

MultiPoly WPoly::coeff(unsigned deg_p, unsigned deg_q) const
{
    const Coeffs &part = deg_q == 0 ? m_even : m_odd;
    if (deg_q > 1 || deg_p >= part.size()) {
        return {};
    }
    return part[deg_p];
}

int WPoly::weight() const
{
    int w = -1;
    if (!m_even.empty()) {
        w = 2 * static_cast<int>(m_even.size() - 1);
    }
    if (!m_odd.empty()) {
        w = std::max(w, 2 * static_cast<int>(m_odd.size() - 1) + 3);
    }
    return w;
}

void WPoly::trim()
{
    m_even = trimmed(std::move(m_even));
    m_odd = trimmed(std::move(m_odd));
}

bool WPoly::compatible(const WPoly &o) const
{
    return m_inv == o.m_inv || (m_inv->g2 == o.m_inv->g2 && m_inv->g3 == o.m_inv->g3);
}

void WPoly::check_compatible(const WPoly &o) const
{
    if (!compatible(o)) {
        throw std::invalid_argument("WPoly: operands live over different invariants");
    }
}

WPoly &WPoly::operator+=(const WPoly &o)
{
    check_compatible(o);
    m_even = add(m_even, o.m_even);
    m_odd = add(m_odd, o.m_odd);
    return *this;
}

WPoly &WPoly::operator-=(const WPoly &o) { return *this += -o; }

WPoly operator-(const WPoly &a)
{
    return a.map_coeffs([](const MultiPoly &c) { return -c; });
}

WPoly operator*(const WPoly &a, const WPoly &b)
{
    a.check_compatible(b);
    WPoly out(a.m_inv);
    out.m_even = add(mul(a.m_even, b.m_even), mul(cubic(*a.m_inv), mul(a.m_odd, b.m_odd)));
    out.m_odd = add(mul(a.m_even, b.m_odd), mul(a.m_odd, b.m_even));
    return out;
}

WPoly operator*(const WPoly &a, const MultiPoly &c)
{
    WPoly out(a.m_inv);
    out.m_even = scale(a.m_even, c);
    out.m_odd = scale(a.m_odd, c);
    return out;
}

bool operator==(const WPoly &a, const WPoly &b)
{
    a.check_compatible(b);
    return a.m_even == b.m_even && a.m_odd == b.m_odd;
}

WPoly WPoly::map_coeffs(const std::function<MultiPoly(const MultiPoly &)> &fn) const
{
    WPoly out(m_inv);
    for (const auto &c : m_even) {
        out.m_even.push_back(fn(c));
    }
    for (const auto &c : m_odd) {
        out.m_odd.push_back(fn(c));
    }
    out.trim();
    return out;
}

WPoly pow(const WPoly &p, unsigned e)
{
    WPoly out = WPoly::constant(p.invariants(), MultiPoly(1));
    WPoly base = p;
    while (e > 0) {
        if (e & 1U) {
            out = out * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return out;
}

WPoly derivative(const WPoly &p)
{
    // d(a(P)) = a'(P) Q;  d(Q b(P)) = (6P^2 - g2/2) b(P) + R(P) b'(P)
    const WInvariantsPtr &inv = p.invariants();
    const Coeffs wp2 = trimmed({inv->g2 * BigRational(-1, 2), MultiPoly{}, MultiPoly(6)});
    WTerms terms;
    const Coeffs even = add(mul(wp2, p.odd_part()), mul(cubic(*inv), derivative_in_p(p.odd_part())));
    const Coeffs odd = derivative_in_p(p.even_part());
    for (std::size_t i = 0; i < even.size(); ++i) {
        terms[{static_cast<unsigned>(i), 0U}] = even[i];
    }
    for (std::size_t i = 0; i < odd.size(); ++i) {
        terms[{static_cast<unsigned>(i), 1U}] = odd[i];
    }
    return WPoly::wreduce(inv, terms);
}

std::string to_string(const WPoly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const WTerms terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto [dp, dq] = it->first;
        std::string t = "(" + to_string(it->second) + ")";
        if (dp > 0) {
            t += "*P" + (dp > 1 ? "^" + std::to_string(dp) : std::string{});
        }
        if (dq > 0) {
            t += "*Q";
        }
        out += (out.empty() ? "" : " + ") + t;
    }
    return out;
}

WRational::WRational(WPoly num, WPoly den) : m_num(std::move(num)), m_den(std::move(den))
{
    if (m_den.is_zero()) {
        throw std::domain_error("WRational: zero denominator");
    }
    if (!m_num.compatible(m_den)) {
        throw std::invalid_argument("WRational: numerator and denominator live over different invariants");
    }
}

WRational::WRational(const WPoly &p) : WRational(p, WPoly::constant(p.invariants(), MultiPoly(1))) {}

WRational operator+(const WRational &a, const WRational &b)
{
    if (a.m_den == b.m_den) {
        return {a.m_num + b.m_num, a.m_den};
    }
    return {a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den};
}

WRational operator-(const WRational &a) { return {-a.m_num, a.m_den}; }

WRational operator-(const WRational &a, const WRational &b) { return a + (-b); }

WRational operator*(const WRational &a, const WRational &b) { return {a.m_num * b.m_num, a.m_den * b.m_den}; }

WRational operator/(const WRational &a, const WRational &b)
{
    if (b.is_zero()) {
        throw std::domain_error("WRational: division by zero");
    }
    return {a.m_num * b.m_den, a.m_den * b.m_num};
}

bool operator==(const WRational &a, const WRational &b) { return (a.m_num * b.m_den - b.m_num * a.m_den).is_zero(); }

WRational wrat_arith(WOp op, const WRational &a, const WRational &b)
{
    switch (op) {
    case WOp::add:
        return a + b;
    case WOp::sub:
        return a - b;
    case WOp::mul:
        return a * b;
    default:
        return a / b;
    }
}

WRational wrat_derivative(const WRational &a)
{
    return {derivative(a.num()) * a.den() - a.num() * derivative(a.den()), a.den() * a.den()};
}

namespace
{

void check_context(const WInvariants &inv, const WeierstrassContext &ctx)
{
    if (inv.g2 != ctx.g2 || inv.g3 != ctx.g3) {
        throw std::invalid_argument("expansion context has different invariants");
    }
}

LaurentSeries horner(const Coeffs &a, const LaurentSeries &wp)
{
    if (a.empty()) {
        return LaurentSeries::zero(kExact);
    }
    LaurentSeries acc = LaurentSeries::constant(a.back());
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        acc = acc * wp + LaurentSeries::constant(a[i]);
    }
    return acc;
}

/// Repeats `expand` with a growing wp order until the result is known through x^order.
template <typename Fn> LaurentSeries expand_adaptively(const WeierstrassContext &ctx, int order, int start, Fn expand)
{
    int wp_order = std::max(start, 4);
    for (int attempt = 0; attempt < 8; ++attempt) {
        const WeierstrassContext local =
            ctx.wp.trunc() >= wp_order ? ctx : WeierstrassContext::build(ctx.g2, ctx.g3, wp_order);
        const LaurentSeries s = expand(local);
        if (s.trunc() >= order) {
            return s.truncated(order);
        }
        wp_order += std::max(4, order - s.trunc() + 2);
    }
    throw SeriesError("expansion did not reach the requested order");
}

} // namespace

LaurentSeries wpoly_laurent_expand(const WPoly &p, const WeierstrassContext &ctx, int order)
{
    check_context(*p.invariants(), ctx);
    return expand_adaptively(ctx, order, order + std::max(p.weight(), 0) + 4, [&](const WeierstrassContext &c) {
        return horner(p.even_part(), c.wp) + c.wp_prime * horner(p.odd_part(), c.wp);
    });
}

LaurentSeries wterms_laurent_expand(const WTerms &terms, const WeierstrassContext &ctx, int order)
{
    int weight = 0;
    for (const auto &[deg, c] : terms) {
        weight = std::max(weight, static_cast<int>(2 * deg.first + 3 * deg.second));
    }
    return expand_adaptively(ctx, order, order + weight + 4, [&](const WeierstrassContext &c) {
        LaurentSeries acc = LaurentSeries::zero(kExact);
        for (const auto &[deg, coeff] : terms) {
            acc = acc + pow(c.wp, deg.first) * pow(c.wp_prime, deg.second) * coeff;
        }
        return acc;
    });
}

LaurentSeries wrat_laurent_expand(const WRational &a, const WeierstrassContext &ctx, int order)
{
    check_context(*a.num().invariants(), ctx);
    const int start = order + std::max(a.num().weight(), 0) + 2 * std::max(a.den().weight(), 0) + 4;
    return expand_adaptively(ctx, order, start, [&](const WeierstrassContext &c) {
        const LaurentSeries num = horner(a.num().even_part(), c.wp) + c.wp_prime * horner(a.num().odd_part(), c.wp);
        const LaurentSeries den = horner(a.den().even_part(), c.wp) + c.wp_prime * horner(a.den().odd_part(), c.wp);
        if (den.is_zero()) {
            return LaurentSeries::zero(-1); // not enough precision yet
        }
        return num * inverse(den);
    });
}

std::string closed_form_name(ClosedFormId id)
{
    switch (id) {
    case ClosedFormId::level2_ex1:
        return "2-ex1";
    case ClosedFormId::level2_ex1_alt:
        return "2-ex1-alt";
    case ClosedFormId::level2_ex2:
        return "2-ex2";
    case ClosedFormId::level2_ex3:
        return "2-ex3";
    case ClosedFormId::level3:
        return "3";
    default:
        return "4";
    }
}

const std::vector<ClosedFormId> &all_closed_forms()
{
    static const std::vector<ClosedFormId> ids{ClosedFormId::level2_ex1, ClosedFormId::level2_ex1_alt,
                                               ClosedFormId::level2_ex2, ClosedFormId::level2_ex3,
                                               ClosedFormId::level3,     ClosedFormId::level4};
    return ids;
}

ClosedFormId parse_closed_form(const std::string &text)
{
    for (ClosedFormId id : all_closed_forms()) {
        if (closed_form_name(id) == text) {
            return id;
        }
    }
    throw std::invalid_argument("unknown closed form '" + text + "'");
}

ClosedForm closed_form(ClosedFormId id)
{
    std::optional<WRational> f;
    std::vector<std::pair<std::string, MultiPoly>> parameters;
    auto build = [&](const char *g2, const char *g3) {
        const WInvariantsPtr inv = make_invariants(P_(g2), P_(g3));
        return std::make_tuple(inv, WPoly::P(inv), WPoly::Q(inv));
    };
    auto k = [](const WInvariantsPtr &inv, const MultiPoly &c) { return WPoly::constant(inv, c); };
    switch (id) {
    case ClosedFormId::level4: {
        auto [inv, P, Q] = build("-1/4*(13*alpha^4 - 6*alpha^2*beta - 3*beta^2)",
                                 "1/8*(alpha^2 - beta)*(17*alpha^4 - 14*alpha^2*beta + beta^2)");
        const MultiPoly c1 = P_("alpha^2 - beta");
        const MultiPoly c2 = P_("51/8*alpha^4 - 21/4*alpha^2*beta + 3/8*beta^2");
        const MultiPoly c3 = P_("-1/16*(alpha^2 - beta)*(47*alpha^4 - 34*alpha^2*beta - beta^2)");
        const MultiPoly c4 =
            P_("545/256*alpha^8 - 295/64*alpha^6*beta + 435/128*alpha^4*beta^2 - 55/64*alpha^2*beta^3 + 1/256*beta^4");
        const WPoly s = MultiPoly(4) * P + k(inv, P_("3*alpha^2 - beta"));
        const WPoly num = P_("alpha") * s * (MultiPoly(2) * P + k(inv, P_("-alpha^2 + beta"))) *
                              (MultiPoly(4) * P + k(inv, P_("-7*alpha^2 + 5*beta"))) -
                          Q * s * s;
        const WPoly den = MultiPoly(32) * (pow(P, 4) + c1 * pow(P, 3) + c2 * pow(P, 2) + c3 * P + k(inv, c4));
        f = WRational(num, den);
        parameters = {{"c1", c1}, {"c2", c2}, {"c3", c3}, {"c4", c4}, {"g2", inv->g2}, {"g3", inv->g3}};
        break;
    }
    case ClosedFormId::level3: {
        auto [inv, P, Q] = build("4/3*alpha*(alpha^3 - gamma)", "-1/27*(8*alpha^6 + 20*alpha^3*gamma - gamma^2)");
        f = WRational(MultiPoly(-6) * (P + k(inv, P_("alpha^2"))),
                          MultiPoly(3) * Q + P_("6*alpha") * P - k(inv, P_("2*alpha^3 + gamma")));
        parameters = {{"g2", inv->g2}, {"g3", inv->g3}};
        break;
    }
    case ClosedFormId::level2_ex1:
    case ClosedFormId::level2_ex1_alt: {
        auto [inv, P, Q] = build("4*(a^2 + a*b + b^2)", "4*a*b*(-a - b)");
        const MultiPoly c = P_("-a - b");
        if (id == ClosedFormId::level2_ex1) {
            f = WRational(MultiPoly(-2) * (P - k(inv, c)), Q);
            parameters = {{"c", c}, {"g2", inv->g2}, {"g3", inv->g3}};
        } else {
            f = WRational(Q, MultiPoly(-2) * (P - k(inv, P_("a"))) * (P - k(inv, P_("b"))));
            parameters = {{"g2", inv->g2}, {"g3", inv->g3}};
        }
        break;
    }
    case ClosedFormId::level2_ex2: {
        auto [inv, P, Q] = build("2*(a^2 + 4*a*b + b^2)", "-1/2*(a + b)*(a^2 + 6*a*b + b^2)");
        f = WRational(Q, MultiPoly(-2) * (P - k(inv, P_("a"))) * (P - k(inv, P_("b"))));
        parameters = {{"g2", inv->g2}, {"g3", inv->g3}};
        break;
    }
    case ClosedFormId::level2_ex3: {
        auto [inv, P, Q] = build("-4*(a^2 - 2*a*b - 2*b^2)", "4*b*(a^2 - 2*a*b - b^2)");
        const MultiPoly c = P_("2*b - a");
        f = WRational(MultiPoly(-2) * (P - k(inv, P_("a"))) * (P - k(inv, P_("b"))), Q * (P - k(inv, c)));
        parameters = {{"c", c}, {"g2", inv->g2}, {"g3", inv->g3}};
        break;
    }
    }
    return {id, *f, std::move(parameters)};
}

LaurentSeries stated_level_series(int level)
{
    std::vector<MultiPoly> c;
    switch (level) {
    case 2:
        c = {MultiPoly{}, MultiPoly(1), MultiPoly{}, P_("-1/3*delta"), MultiPoly{}, P_("1/30*(delta^2 + 3*epsilon)")};
        break;
    case 3:
        c = {MultiPoly{}, MultiPoly(1), P_("alpha"), P_("2*alpha^2"), P_("1/6*(10*alpha^3 - gamma)"),
             P_("1/15*alpha*(22*alpha^3 - 7*gamma)")};
        break;
    case 4:
        c = {MultiPoly{},
             MultiPoly(1),
             P_("alpha"),
             P_("1/2*(alpha^2 + beta)"),
             P_("-5/2*alpha*(alpha^2 - beta)"),
             P_("-1/40*(233*alpha^4 - 186*alpha^2*beta - 3*beta^2)")};
        break;
    default:
        throw std::invalid_argument("stated_level_series: level must be 2, 3 or 4");
    }
    return LaurentSeries::from_coeffs(0, std::move(c), 5);
}

namespace
{

/// N_j with f^(j) = N_j / D^(j+1).
std::vector<WPoly> derivative_tower(const WRational &f, int depth)
{
    const WPoly &d = f.den();
    const WPoly dd = derivative(d);
    std::vector<WPoly> n{f.num()};
    for (int j = 0; j < depth; ++j) {
        n.push_back(derivative(n.back()) * d - n.back() * dd * MultiPoly(j + 1));
    }
    return n;
}

} // namespace

WPoly feq_numerator(const WRational &f, const MultiPoly &c1, const MultiPoly &c2, const MultiPoly &c3)
{
    const auto n = derivative_tower(f, 3);
    const WPoly &d = f.den();
    const WPoly d2 = d * d;
    return n[0] * n[3] - n[1] * n[2] * MultiPoly(3) - n[1] * n[1] * d * c1 - n[0] * n[1] * d2 * c2 -
           n[0] * n[0] * d2 * d * c3;
}

WPoly end_numerator(const WRational &f, const MultiPoly &A1, const MultiPoly &B2)
{
    const auto n = derivative_tower(f, 2);
    const WPoly &d = f.den();
    const WPoly d2 = d * d;
    const WPoly n11 = n[1] * n[1];
    const WPoly n02 = n[0] * n[2];
    const WPoly n01d = n[0] * n[1] * d;
    const WPoly n00d2 = n[0] * n[0] * d2;
    const WPoly lin = n[1] * MultiPoly(2) + n[0] * d * A1;
    const MultiPoly k = MultiPoly(3) * A1 * A1 - MultiPoly(4) * B2;
    const WPoly x = n11 * MultiPoly(4) - n02 * MultiPoly(2) - n01d * (MultiPoly(2) * A1) - n00d2 * k;
    const WPoly y = n11 * MultiPoly(2) - n02 - n01d * A1 - n00d2 * (MultiPoly(2) * B2);
    const WPoly d4 = d2 * d2;
    return lin * lin * d4 * d4 * MultiPoly(4) - x * y * y;
}

const std::vector<std::string> &assertion_names()
{
    static const std::vector<std::string> names{"feq4", "series4", "end4", "ode3", "series3", "ode2"};
    return names;
}

namespace
{

WeierstrassContext context_for(const WRational &f, int order)
{
    return WeierstrassContext::build(f.num().invariants()->g2, f.num().invariants()->g3, order);
}

AssertionResult from_numerator(const std::string &name, const WPoly &numerator, const LaurentSeries &series_residual)
{
    AssertionResult r;
    r.assertion = name;
    r.exact_pass = numerator.is_zero();
    r.series_pass = series_residual.is_zero();
    r.residual = to_string(numerator);
    r.detail = "series residual zero through x^" + std::to_string(series_residual.trunc());
    if (!r.series_pass) {
        r.detail = "series residual nonzero at x^" + std::to_string(series_residual.valuation());
    }
    return r;
}

AssertionResult series_match(const std::string &name, int level, ClosedFormId id, int order)
{
    const ClosedForm cf = closed_form(id);
    const LaurentSeries s = wrat_laurent_expand(cf.f, context_for(cf.f, order), order);
    const LaurentSeries stated = stated_level_series(level);
    AssertionResult r;
    r.assertion = name;
    const LaurentSeries diff = s.truncated(5) - stated;
    r.exact_pass = diff.is_zero();
    r.residual = r.exact_pass ? "0" : to_string(diff.coeff(diff.valuation()));
    const LaurentSeries ode = level_exponential(level, order);
    r.series_pass = (s - ode).is_zero();
    r.detail = std::string(r.exact_pass ? "matches the stated series through x^5" : "differs from the stated series") +
               (r.series_pass ? "; matches the ODE solution through x^" + std::to_string(order)
                              : "; differs from the ODE solution");
    return r;
}

std::vector<AssertionResult> run(const std::string &which, int order)
{
    const MultiPoly alpha = MultiPoly::symbol(Symbol::alpha);
    const MultiPoly beta = MultiPoly::symbol(Symbol::beta);
    const MultiPoly gamma = MultiPoly::symbol(Symbol::gamma);
    if (which == "feq4") {
        const ClosedForm cf = closed_form(ClosedFormId::level4);
        const OdeConstants c{P_("-6*alpha"), P_("6*(alpha^2 - beta)"), P_("6*alpha*(5*alpha^2 - 3*beta)")};
        const LaurentSeries s = wrat_laurent_expand(cf.f, context_for(cf.f, order), order);
        return {from_numerator(which, feq_numerator(cf.f, c.c1, c.c2, c.c3), feq_residual(s, c))};
    }
    if (which == "series4") {
        return {series_match(which, 4, ClosedFormId::level4, order)};
    }
    if (which == "series3") {
        return {series_match(which, 3, ClosedFormId::level3, order)};
    }
    if (which == "end4") {
        const ClosedForm cf = closed_form(ClosedFormId::level4);
        const MultiPoly A1 = P_("2*alpha");
        const MultiPoly B2 = P_("1/2*(3*beta - alpha^2)");
        const LaurentSeries s = wrat_laurent_expand(cf.f, context_for(cf.f, order), order);
        return {from_numerator(which, end_numerator(cf.f, A1, B2), end_equation_residual(s, A1, B2))};
    }
    if (which == "ode3") {
        const ClosedForm cf = closed_form(ClosedFormId::level3);
        const OdeConstants c{P_("-6*alpha"), P_("-12*alpha^2"), P_("2*gamma + 16*alpha^3")};
        const LaurentSeries s = wrat_laurent_expand(cf.f, context_for(cf.f, order), order);
        return {from_numerator(which, feq_numerator(cf.f, c.c1, c.c2, c.c3), feq_residual(s, c))};
    }
    if (which == "ode2") {
        std::vector<AssertionResult> out;
        for (ClosedFormId id : {ClosedFormId::level2_ex1, ClosedFormId::level2_ex1_alt, ClosedFormId::level2_ex2,
                                ClosedFormId::level2_ex3}) {
            const ClosedForm cf = closed_form(id);
            const LaurentSeries s = wrat_laurent_expand(cf.f, context_for(cf.f, order), order);
            // f = x - delta/3 x^3 + ...
            const MultiPoly delta = s.coeff(3) * BigRational(-3);
            const OdeConstants c{MultiPoly{}, MultiPoly(4) * delta, MultiPoly{}};
            AssertionResult r = from_numerator("ode2:" + closed_form_name(id),
                                               feq_numerator(cf.f, c.c1, c.c2, c.c3), feq_residual(s, c));
            bool odd = s.coeff(1) == MultiPoly(1);
            for (int d = 0; d <= s.trunc(); d += 2) {
                odd = odd && s.coeff(d).is_zero();
            }
            r.series_pass = r.series_pass && odd;
            r.detail += "; delta = " + to_string(delta) + (odd ? "; odd" : "; not odd");
            out.push_back(std::move(r));
        }
        const ClosedForm e1 = closed_form(ClosedFormId::level2_ex1);
        const ClosedForm e1alt = closed_form(ClosedFormId::level2_ex1_alt);
        AssertionResult same;
        same.assertion = "ode2:2-ex1=2-ex1-alt";
        const WPoly cross = e1.f.num() * e1alt.f.den() - e1alt.f.num() * e1.f.den();
        same.exact_pass = cross.is_zero();
        same.residual = to_string(cross);
        same.series_pass = (wrat_laurent_expand(e1.f, context_for(e1.f, order), order) -
                            wrat_laurent_expand(e1alt.f, context_for(e1alt.f, order), order))
                               .is_zero();
        same.detail = "both expressions of the first example agree";
        out.push_back(std::move(same));
        return out;
    }
    throw std::invalid_argument("unknown assertion '" + which + "'");
}

} // namespace

std::vector<AssertionResult> assertion_suite(const std::string &which, int order)
{
    if (which == "all") {
        std::vector<AssertionResult> out;
        for (const auto &name : assertion_names()) {
            auto part = run(name, order);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    return run(which, order);
}

} // namespace ellevel
