#include "ellevel/laurent.hpp"

#include <algorithm>
#include <string>

namespace ellevel
{

LaurentSeries LaurentSeries::zero(int trunc)
{
    LaurentSeries s;
    s.m_trunc = saturate_order(trunc);
    return s;
}

LaurentSeries LaurentSeries::constant(const MultiPoly &c, int trunc) { return monomial(c, 0, trunc); }

LaurentSeries LaurentSeries::monomial(const MultiPoly &c, int degree, int trunc)
{
    return from_coeffs(degree, {c}, trunc);
}

LaurentSeries LaurentSeries::from_coeffs(int low, std::vector<MultiPoly> coeffs, int trunc)
{
    LaurentSeries s;
    s.m_trunc = saturate_order(trunc);
    s.m_low = low;
    const long long keep = static_cast<long long>(s.m_trunc) - low + 1;
    if (keep <= 0) {
        coeffs.clear();
    } else if (static_cast<long long>(coeffs.size()) > keep) {
        coeffs.resize(static_cast<std::size_t>(keep));
    }
    s.m_coeffs = std::move(coeffs);
    s.trim();
    return s;
}

void LaurentSeries::trim()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
    std::size_t lead = 0;
    while (lead < m_coeffs.size() && m_coeffs[lead].is_zero()) {
        ++lead;
    }
    if (lead > 0) {
        m_coeffs.erase(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
        m_low += static_cast<int>(lead);
    }
    if (m_coeffs.empty()) {
        m_low = 0;
    }
}

int LaurentSeries::valuation() const
{
    if (m_coeffs.empty()) {
        return is_exact() ? kExact : m_trunc + 1;
    }
    return m_low;
}

MultiPoly LaurentSeries::coeff(int d) const
{
    if (d > m_trunc) {
        throw SeriesError("coefficient of x^" + std::to_string(d) + " is beyond truncation order " +
                          std::to_string(m_trunc));
    }
    if (d < m_low || d > high_degree()) {
        return {};
    }
    return m_coeffs[static_cast<std::size_t>(d - m_low)];
}

MultiPoly LaurentSeries::leading_coeff() const { return m_coeffs.empty() ? MultiPoly{} : m_coeffs.front(); }

std::optional<int> LaurentSeries::first_nonzero() const
{
    if (m_coeffs.empty()) {
        return std::nullopt;
    }
    return m_low;
}

LaurentSeries LaurentSeries::truncated(int n) const
{
    if (n >= m_trunc) {
        return *this;
    }
    return from_coeffs(m_low, m_coeffs, n);
}

LaurentSeries LaurentSeries::shifted(int k) const
{
    LaurentSeries s = *this;
    if (!s.m_coeffs.empty()) {
        s.m_low += k;
    }
    s.m_trunc = saturate_order(static_cast<long long>(m_trunc) + k);
    return s;
}

LaurentSeries LaurentSeries::map_coeffs(const std::function<MultiPoly(const MultiPoly &)> &fn) const
{
    std::vector<MultiPoly> out;
    out.reserve(m_coeffs.size());
    for (const auto &c : m_coeffs) {
        out.push_back(fn(c));
    }
    return from_coeffs(m_low, std::move(out), m_trunc);
}

namespace
{

LaurentSeries add_impl(const LaurentSeries &a, const LaurentSeries &b, bool negate)
{
    const int trunc = std::min(a.trunc(), b.trunc());
    if (a.is_zero() && b.is_zero()) {
        return LaurentSeries::zero(trunc);
    }
    const int lo = std::min(a.is_zero() ? kExact : a.valuation(), b.is_zero() ? kExact : b.valuation());
    const int hi = std::min(trunc, std::max(a.is_zero() ? lo : a.high_degree(), b.is_zero() ? lo : b.high_degree()));
    if (hi < lo) {
        return LaurentSeries::zero(trunc);
    }
    std::vector<MultiPoly> out(static_cast<std::size_t>(hi - lo + 1));
    for (int d = lo; d <= hi; ++d) {
        MultiPoly c = a.coeff(d);
        if (negate) {
            c -= b.coeff(d);
        } else {
            c += b.coeff(d);
        }
        out[static_cast<std::size_t>(d - lo)] = std::move(c);
    }
    return LaurentSeries::from_coeffs(lo, std::move(out), trunc);
}

} // namespace

LaurentSeries &LaurentSeries::operator+=(const LaurentSeries &o) { return *this = add_impl(*this, o, false); }

LaurentSeries &LaurentSeries::operator-=(const LaurentSeries &o) { return *this = add_impl(*this, o, true); }

LaurentSeries &LaurentSeries::operator*=(const MultiPoly &c)
{
    for (auto &x : m_coeffs) {
        x = x * c;
    }
    trim();
    return *this;
}

LaurentSeries operator-(const LaurentSeries &a)
{
    return a.map_coeffs([](const MultiPoly &c) { return -c; });
}

LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b)
{
    const long long ta = a.trunc(), tb = b.trunc();
    const long long va = a.valuation(), vb = b.valuation();
    const int trunc = saturate_order(std::min(ta + vb, tb + va));
    if (a.is_zero() || b.is_zero()) {
        return LaurentSeries::zero(trunc);
    }
    const int lo = a.valuation() + b.valuation();
    const int hi = std::min<long long>(trunc, static_cast<long long>(a.high_degree()) + b.high_degree());
    if (hi < lo) {
        return LaurentSeries::zero(trunc);
    }
    std::vector<MultiPoly> out(static_cast<std::size_t>(hi - lo + 1));
    for (int d = lo; d <= hi; ++d) {
        PolyAccumulator acc;
        const int i_lo = std::max(a.valuation(), d - b.high_degree());
        const int i_hi = std::min(a.high_degree(), d - b.valuation());
        for (int i = i_lo; i <= i_hi; ++i) {
            acc.add_product(a.coeff(i), b.coeff(d - i));
        }
        out[static_cast<std::size_t>(d - lo)] = acc.take();
    }
    return LaurentSeries::from_coeffs(lo, std::move(out), trunc);
}

LaurentSeries inverse(const LaurentSeries &g)
{
    if (g.is_zero()) {
        throw SeriesError("inverse of a series with no known nonzero coefficient");
    }
    const int v = g.valuation();
    const auto lead = g.coeff(v).as_constant();
    if (!lead || lead->is_zero()) {
        throw SeriesError("inverse requires a nonzero rational leading coefficient, got " + to_string(g.coeff(v)));
    }
    const BigRational inv_lead = lead->inverse();
    if (g.is_exact()) {
        if (g.high_degree() == v) {
            return LaurentSeries::monomial(MultiPoly(inv_lead), -v);
        }
        throw SeriesError("inverse of an exact multi-term series needs a truncation order");
    }
    const int rel = g.trunc() - v;
    std::vector<MultiPoly> h(static_cast<std::size_t>(rel + 1));
    h[0] = MultiPoly(inv_lead);
    const BigRational neg_inv = -inv_lead;
    for (int n = 1; n <= rel; ++n) {
        PolyAccumulator acc;
        const int kmax = std::min(n, g.high_degree() - v);
        for (int k = 1; k <= kmax; ++k) {
            acc.add_product(g.coeff(v + k), h[static_cast<std::size_t>(n - k)], neg_inv);
        }
        h[static_cast<std::size_t>(n)] = acc.take();
    }
    return LaurentSeries::from_coeffs(-v, std::move(h), g.trunc() - 2 * v);
}

LaurentSeries operator/(const LaurentSeries &a, const LaurentSeries &b) { return a * inverse(b); }

LaurentSeries pow(const LaurentSeries &f, unsigned e)
{
    LaurentSeries result = LaurentSeries::constant(MultiPoly(1));
    LaurentSeries base = f;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

LaurentSeries derivative(const LaurentSeries &f)
{
    if (f.is_zero()) {
        return LaurentSeries::zero(saturate_order(static_cast<long long>(f.trunc()) - 1));
    }
    std::vector<MultiPoly> out;
    for (int d = f.valuation(); d <= f.high_degree(); ++d) {
        out.push_back(f.coeff(d) * BigRational(d));
    }
    return LaurentSeries::from_coeffs(f.valuation() - 1, std::move(out),
                                      saturate_order(static_cast<long long>(f.trunc()) - 1));
}

LaurentSeries integrate(const LaurentSeries &f)
{
    const int trunc = saturate_order(static_cast<long long>(f.trunc()) + 1);
    if (f.is_zero()) {
        return LaurentSeries::zero(trunc);
    }
    if (f.trunc() >= -1 && !f.coeff(-1).is_zero()) {
        throw SeriesError("integrate: nonzero x^-1 coefficient");
    }
    std::vector<MultiPoly> out;
    const int lo = f.valuation() + 1;
    for (int d = f.valuation(); d <= f.high_degree(); ++d) {
        out.push_back(d == -1 ? MultiPoly{} : f.coeff(d) * BigRational(1, d + 1));
    }
    return LaurentSeries::from_coeffs(lo, std::move(out), trunc);
}

LaurentSeries compose(const LaurentSeries &outer, const LaurentSeries &inner)
{
    if (outer.pole_order() > 0) {
        throw SeriesError("compose: outer series has a pole");
    }
    const long long v = inner.valuation();
    if (v <= 0 && !outer.is_exact()) {
        throw SeriesError("compose: inner series must vanish at 0 unless outer is an exact polynomial");
    }
    if (outer.is_zero()) {
        return outer;
    }
    LaurentSeries acc = LaurentSeries::constant(outer.coeff(outer.high_degree()));
    for (int k = outer.high_degree() - 1; k >= 0; --k) {
        acc = acc * inner + LaurentSeries::constant(outer.coeff(k));
    }
    if (!outer.is_exact()) {
        const long long bound = (static_cast<long long>(outer.trunc()) + 1) * v - 1;
        acc = acc.truncated(saturate_order(std::min<long long>(bound, kExact)));
    }
    return acc;
}

LaurentSeries reversion(const LaurentSeries &f)
{
    if (f.valuation() != 1 || f.coeff(1) != MultiPoly(1)) {
        throw SeriesError("reversion requires f = x + O(x^2)");
    }
    if (f.is_exact()) {
        if (f.high_degree() == 1) {
            return f;
        }
        throw SeriesError("reversion of an exact polynomial needs a truncation order");
    }
    const int n_max = f.trunc();
    const LaurentSeries h = inverse(f.shifted(-1));
    std::vector<MultiPoly> g(static_cast<std::size_t>(n_max));
    LaurentSeries hp = LaurentSeries::constant(MultiPoly(1));
    for (int n = 1; n <= n_max; ++n) {
        hp = hp * h;
        g[static_cast<std::size_t>(n - 1)] = hp.coeff(n - 1) * BigRational(1, n);
    }
    return LaurentSeries::from_coeffs(1, std::move(g), n_max);
}

LaurentSeries exp(const LaurentSeries &f)
{
    if (f.is_zero()) {
        return LaurentSeries::constant(MultiPoly(1), f.trunc());
    }
    if (f.valuation() < 1) {
        throw SeriesError("exp requires zero constant term and no pole");
    }
    if (f.is_exact()) {
        throw SeriesError("exp of an exact series needs a truncation order");
    }
    const int n_max = f.trunc();
    std::vector<MultiPoly> e(static_cast<std::size_t>(n_max + 1));
    e[0] = MultiPoly(1);
    for (int n = 1; n <= n_max; ++n) {
        PolyAccumulator acc;
        for (int k = 1; k <= n; ++k) {
            const MultiPoly fk = f.coeff(k);
            if (!fk.is_zero()) {
                acc.add_product(fk, e[static_cast<std::size_t>(n - k)], BigRational(k, n));
            }
        }
        e[static_cast<std::size_t>(n)] = acc.take();
    }
    return LaurentSeries::from_coeffs(0, std::move(e), n_max);
}

bool vanishes_through(const LaurentSeries &f, int n)
{
    if (f.trunc() < n) {
        return false;
    }
    return f.is_zero() || f.valuation() > n;
}

LaurentSeries substitute(const LaurentSeries &f, const Bindings &bindings)
{
    return f.map_coeffs([&](const MultiPoly &c) { return substitute(c, bindings); });
}

std::complex<double> eval(const LaurentSeries &f, const std::map<Symbol, std::complex<double>> &point,
                          std::complex<double> x0)
{
    std::complex<double> acc{0.0, 0.0};
    if (f.is_zero()) {
        return acc;
    }
    for (int d = f.high_degree(); d >= f.valuation(); --d) {
        acc = acc * x0 + eval(f.coeff(d), point);
    }
    return acc * std::pow(x0, f.valuation());
}

} // namespace ellevel
