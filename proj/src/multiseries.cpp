#include "ellevel/multiseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellevel
{

MultiSeries::MultiSeries(std::size_t nvars, int cap) : m_nvars(nvars), m_cap(saturate_order(cap))
{
    if (nvars == 0 || nvars > kMaxSeriesVars) {
        throw std::invalid_argument("MultiSeries: variable count must be in 1..4");
    }
}

MultiSeries MultiSeries::variable(std::size_t i, std::size_t nvars)
{
    SeriesExponent e{};
    e.at(i) = 1;
    return term(MultiPoly(1), e, nvars);
}

MultiSeries MultiSeries::constant(const MultiPoly &c, std::size_t nvars, int cap)
{
    return term(c, SeriesExponent{}, nvars, cap);
}

MultiSeries MultiSeries::term(const MultiPoly &c, const SeriesExponent &e, std::size_t nvars, int cap)
{
    MultiSeries s(nvars, cap);
    s.add_term(e, c);
    return s;
}

int MultiSeries::valuation() const
{
    if (m_terms.empty()) {
        return is_exact() ? kExact : m_cap + 1;
    }
    return static_cast<int>(total_degree(m_terms.begin()->first));
}

MultiPoly MultiSeries::coeff(const SeriesExponent &e) const
{
    if (static_cast<int>(total_degree(e)) > m_cap) {
        throw SeriesError("multivariate coefficient beyond cap");
    }
    auto it = m_terms.find(e);
    return it == m_terms.end() ? MultiPoly{} : it->second;
}

std::optional<std::pair<SeriesExponent, MultiPoly>> MultiSeries::first_nonzero() const
{
    if (m_terms.empty()) {
        return std::nullopt;
    }
    return *m_terms.begin();
}

void MultiSeries::add_term(const SeriesExponent &e, const MultiPoly &c)
{
    for (std::size_t i = m_nvars; i < kMaxSeriesVars; ++i) {
        if (e[i] != 0) {
            throw std::invalid_argument("MultiSeries: exponent uses an undeclared variable");
        }
    }
    if (c.is_zero() || static_cast<int>(total_degree(e)) > m_cap) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

MultiSeries MultiSeries::truncated(int cap) const
{
    if (cap >= m_cap) {
        return *this;
    }
    MultiSeries s(m_nvars, cap);
    for (const auto &[e, c] : m_terms) {
        if (static_cast<int>(total_degree(e)) <= cap) {
            s.m_terms.emplace(e, c);
        }
    }
    return s;
}

MultiSeries MultiSeries::map_coeffs(const std::function<MultiPoly(const MultiPoly &)> &fn) const
{
    MultiSeries s(m_nvars, m_cap);
    for (const auto &[e, c] : m_terms) {
        s.add_term(e, fn(c));
    }
    return s;
}

MultiSeries MultiSeries::permuted(std::span<const std::size_t> perm) const
{
    if (perm.size() != m_nvars) {
        throw std::invalid_argument("permuted: permutation size mismatch");
    }
    MultiSeries s(m_nvars, m_cap);
    for (const auto &[e, c] : m_terms) {
        SeriesExponent out{};
        for (std::size_t i = 0; i < m_nvars; ++i) {
            out[i] = e[perm[i]];
        }
        s.m_terms.emplace(out, c);
    }
    return s;
}

MultiSeries MultiSeries::embedded(std::size_t nvars, std::span<const std::size_t> placement) const
{
    if (placement.size() != m_nvars) {
        throw std::invalid_argument("embedded: placement size mismatch");
    }
    MultiSeries s(nvars, m_cap);
    for (const auto &[e, c] : m_terms) {
        SeriesExponent out{};
        for (std::size_t i = 0; i < m_nvars; ++i) {
            out.at(placement[i]) = static_cast<std::uint8_t>(out.at(placement[i]) + e[i]);
        }
        s.add_term(out, c);
    }
    return s;
}

MultiSeries &MultiSeries::operator+=(const MultiSeries &o)
{
    if (o.m_nvars != m_nvars) {
        throw std::invalid_argument("MultiSeries: variable count mismatch");
    }
    m_cap = std::min(m_cap, o.m_cap);
    for (auto it = m_terms.begin(); it != m_terms.end();) {
        it = static_cast<int>(total_degree(it->first)) > m_cap ? m_terms.erase(it) : std::next(it);
    }
    for (const auto &[e, c] : o.m_terms) {
        add_term(e, c);
    }
    return *this;
}

MultiSeries &MultiSeries::operator-=(const MultiSeries &o) { return *this += -o; }

MultiSeries &MultiSeries::operator*=(const MultiPoly &c)
{
    for (auto it = m_terms.begin(); it != m_terms.end();) {
        it->second = it->second * c;
        it = it->second.is_zero() ? m_terms.erase(it) : std::next(it);
    }
    return *this;
}

MultiSeries operator-(const MultiSeries &a)
{
    return a.map_coeffs([](const MultiPoly &c) { return -c; });
}

MultiSeries operator*(const MultiSeries &a, const MultiSeries &b)
{
    if (a.m_nvars != b.m_nvars) {
        throw std::invalid_argument("MultiSeries: variable count mismatch");
    }
    const long long cap = std::min<long long>(static_cast<long long>(a.m_cap) + b.valuation(),
                                              static_cast<long long>(b.m_cap) + a.valuation());
    MultiSeries out(a.m_nvars, saturate_order(cap));
    std::map<SeriesExponent, PolyAccumulator, SeriesExponentOrder> acc;
    for (const auto &[ea, ca] : a.m_terms) {
        const long long da = total_degree(ea);
        for (const auto &[eb, cb] : b.m_terms) {
            if (da + total_degree(eb) > out.m_cap) {
                break; // b's terms are in ascending degree
            }
            SeriesExponent e{};
            for (std::size_t i = 0; i < kMaxSeriesVars; ++i) {
                e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            }
            acc[e].add_product(ca, cb);
        }
    }
    for (auto &[e, p] : acc) {
        MultiPoly c = p.take();
        if (!c.is_zero()) {
            out.m_terms.emplace(e, std::move(c));
        }
    }
    return out;
}

MultiSeries compose(const LaurentSeries &outer, const MultiSeries &inner)
{
    if (outer.pole_order() > 0) {
        throw SeriesError("compose: outer series has a pole");
    }
    const long long v = inner.valuation();
    if (v <= 0 && !outer.is_exact()) {
        throw SeriesError("compose: inner series must vanish at 0 unless outer is exact");
    }
    const std::size_t m = inner.nvars();
    if (outer.is_zero()) {
        return MultiSeries(m, outer.trunc());
    }
    int cap = inner.cap();
    if (!outer.is_exact()) {
        cap = saturate_order(std::min<long long>(cap, (static_cast<long long>(outer.trunc()) + 1) * v - 1));
    }
    const MultiSeries x = inner.truncated(cap);
    MultiSeries acc = MultiSeries::constant(outer.coeff(outer.high_degree()), m);
    for (int k = outer.high_degree() - 1; k >= 0; --k) {
        acc = (acc * x).truncated(cap) + MultiSeries::constant(outer.coeff(k), m);
    }
    return acc.truncated(cap);
}

MultiSeries substitute_vars(const MultiSeries &f, std::span<const MultiSeries> args, int result_cap)
{
    if (args.size() != f.nvars()) {
        throw std::invalid_argument("substitute_vars: argument count mismatch");
    }
    const std::size_t m = args.front().nvars();
    long long min_val = kExact;
    for (const auto &a : args) {
        if (a.nvars() != m) {
            throw std::invalid_argument("substitute_vars: arguments disagree on variable count");
        }
        min_val = std::min<long long>(min_val, a.valuation());
    }
    if (min_val <= 0 && !f.is_exact()) {
        throw SeriesError("substitute_vars: arguments must vanish at 0");
    }
    int cap = result_cap;
    for (const auto &a : args) {
        cap = std::min(cap, a.cap());
    }
    if (!f.is_exact()) {
        cap = saturate_order(std::min<long long>(cap, (static_cast<long long>(f.cap()) + 1) * min_val - 1));
    }
    // powers[i][k] = args[i]^k truncated at cap
    std::vector<std::vector<MultiSeries>> powers(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
        powers[i].push_back(MultiSeries::constant(MultiPoly(1), m));
        powers[i].push_back(args[i].truncated(cap));
    }
    auto power = [&](std::size_t i, unsigned k) -> const MultiSeries & {
        while (powers[i].size() <= k) {
            powers[i].push_back((powers[i].back() * powers[i][1]).truncated(cap));
        }
        return powers[i][k];
    };
    MultiSeries acc(m, cap);
    for (const auto &[e, c] : f.terms()) {
        if (min_val > 0 && static_cast<long long>(total_degree(e)) * min_val > cap) {
            continue;
        }
        MultiSeries t = MultiSeries::constant(c, m);
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (e[i] > 0) {
                t = (t * power(i, e[i])).truncated(cap);
            }
        }
        acc += t;
    }
    return acc.truncated(cap);
}

LaurentSeries restrict_to_line(const MultiSeries &g, std::span<const BigRational> dirs)
{
    if (dirs.size() != g.nvars()) {
        throw std::invalid_argument("restrict_to_line: direction size mismatch");
    }
    std::map<int, PolyAccumulator> acc;
    for (const auto &[e, c] : g.terms()) {
        BigRational scale(1);
        for (std::size_t i = 0; i < g.nvars(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) {
                scale *= dirs[i];
            }
        }
        acc[static_cast<int>(total_degree(e))].add(c * scale);
    }
    if (acc.empty()) {
        return LaurentSeries::zero(g.cap());
    }
    const int lo = acc.begin()->first;
    const int hi = acc.rbegin()->first;
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(hi - lo + 1));
    for (auto &[d, p] : acc) {
        coeffs[static_cast<std::size_t>(d - lo)] = p.take();
    }
    return LaurentSeries::from_coeffs(lo, std::move(coeffs), g.cap());
}

std::complex<double> eval(const MultiSeries &g, const std::map<Symbol, std::complex<double>> &point,
                          std::span<const std::complex<double>> xs)
{
    if (xs.size() != g.nvars()) {
        throw std::invalid_argument("eval: point dimension mismatch");
    }
    std::complex<double> acc{0.0, 0.0};
    for (const auto &[e, c] : g.terms()) {
        std::complex<double> t = eval(c, point);
        for (std::size_t i = 0; i < g.nvars(); ++i) {
            t *= std::pow(xs[i], static_cast<int>(e[i]));
        }
        acc += t;
    }
    return acc;
}

} // namespace ellevel
