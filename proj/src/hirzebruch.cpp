#include "ellevel/hirzebruch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ellevel/krichever.hpp"

namespace ellevel
{

namespace
{

void check_players(int players)
{
    if (players < 2 || players > 4) {
        throw std::invalid_argument("players must be 2, 3 or 4, got " + std::to_string(players));
    }
}

void check_exponential(const LaurentSeries &f, int cap)
{
    if (f.valuation() != 1 || f.coeff(1) != MultiPoly(1)) {
        throw SeriesError("cleared_residual: series must be x + O(x^2)");
    }
    if (f.trunc() < cap + 1) {
        throw SeriesError("cleared_residual: exponential known through x^" + std::to_string(f.trunc()) +
                          ", cap " + std::to_string(cap) + " needs x^" + std::to_string(cap + 1));
    }
}

/// prod over all k of factors[k] except index i, for every i.
template <typename T> std::vector<T> products_except_one(const std::vector<T> &factors, const T &one)
{
    const std::size_t n = factors.size();
    std::vector<T> prefix(n + 1, one);
    std::vector<T> suffix(n + 1, one);
    for (std::size_t k = 0; k < n; ++k) {
        prefix[k + 1] = prefix[k] * factors[k];
        suffix[n - 1 - k] = suffix[n - k] * factors[n - 1 - k];
    }
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(prefix[i] * suffix[i + 1]);
    }
    return out;
}

std::vector<Symbol> unknowns_for(int players)
{
    switch (players) {
    case 2:
        return {Symbol::alpha, Symbol::gamma};
    case 3:
        return {Symbol::beta, Symbol::lambda};
    default:
        return {Symbol::gamma, Symbol::lambda};
    }
}

/// (c, m) when `a` is the single term c*m with m = 1, or m a power of alpha if allowed.
std::optional<std::pair<BigRational, Monomial>> unit_factor(const MultiPoly &a, bool allow_alpha)
{
    if (a.size() != 1) {
        return std::nullopt;
    }
    const auto &[m, c] = a.terms().front();
    if (m.is_one() || (allow_alpha && m.degree() == m[Symbol::alpha])) {
        return std::make_pair(c, m);
    }
    return std::nullopt;
}

std::string exponent_text(const SeriesExponent &e, std::size_t nvars)
{
    std::string out = "[";
    for (std::size_t i = 0; i < nvars; ++i) {
        out += (i ? "," : "") + std::to_string(e[i]);
    }
    return out + "]";
}

} // namespace

NonlinearConstraint::NonlinearConstraint(const std::string &detail)
    : std::runtime_error("nonlinear constraint; raise D or report: " + detail)
{
}

int cleared_base_degree(int players)
{
    check_players(players);
    return (players - 1) * (players - 1);
}

MultiSeries cleared_residual(const LaurentSeries &f, int players, int cap)
{
    check_players(players);
    check_exponential(f, cap);
    // f(t) = t u(t) splits each H_k into a polynomial part V_k and a unit part U_k
    const LaurentSeries unit = f.truncated(cap + 1).shifted(-1);
    const auto m = static_cast<std::size_t>(players - 1);
    const auto n = static_cast<std::size_t>(players);
    std::vector<MultiSeries> points{MultiSeries(m)};
    for (std::size_t j = 0; j < m; ++j) {
        points.push_back(MultiSeries::variable(j, m));
    }
    const MultiSeries one = MultiSeries::constant(MultiPoly(1), m);
    std::vector<MultiSeries> v(n, one);
    std::vector<MultiSeries> u(n, one);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) {
                continue;
            }
            const MultiSeries diff = points[j] - points[k];
            v[k] = v[k] * diff;
            u[k] = u[k] * compose(unit, diff);
        }
    }
    const std::vector<MultiSeries> v_rest = products_except_one(v, one);
    const std::vector<MultiSeries> u_rest = products_except_one(u, one);
    MultiSeries g(m);
    for (std::size_t i = 0; i < n; ++i) {
        g += v_rest[i] * u_rest[i];
    }
    return g.truncated(cleared_base_degree(players) + cap);
}

LaurentSeries cleared_residual_on_line(const LaurentSeries &f, std::span<const BigRational> dirs, int cap)
{
    const int players = static_cast<int>(dirs.size()) + 1;
    check_players(players);
    check_exponential(f, cap);
    std::vector<BigRational> points{BigRational(0)};
    points.insert(points.end(), dirs.begin(), dirs.end());
    const LaurentSeries fc = f.truncated(cap + 1);
    const LaurentSeries one = LaurentSeries::constant(MultiPoly(1));
    std::vector<LaurentSeries> h(points.size(), one);
    for (std::size_t k = 0; k < points.size(); ++k) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == k) {
                continue;
            }
            const BigRational d = points[j] - points[k];
            if (d.is_zero()) {
                throw std::invalid_argument("cleared_residual_on_line: directions must be distinct and nonzero");
            }
            h[k] = h[k] * compose(fc, LaurentSeries::monomial(MultiPoly(d), 1));
        }
    }
    LaurentSeries g = LaurentSeries::zero(kExact);
    for (const LaurentSeries &t : products_except_one(h, one)) {
        g = g + t;
    }
    return g.truncated(cleared_base_degree(players) + cap);
}

ConstraintReport derive_constraints(int players, int cap)
{
    check_players(players);
    ConstraintReport report;
    report.players = players;
    report.cap = cap;
    const LaurentSeries f = fkr_from_ode(KrParams::symbolic(), std::max(cap + 1, 5));
    const MultiSeries g = cleared_residual(f, players, cap);
    const auto m = static_cast<std::size_t>(players - 1);

    std::vector<Symbol> pending = unknowns_for(players);
    Bindings solved;
    for (const auto &[e, c] : g.terms()) {
        const MultiPoly r = substitute(c, solved);
        if (r.is_zero()) {
            ++report.redundant_checks;
            continue;
        }
        if (pending.empty()) {
            report.first_nonzero = std::make_pair(e, r);
            break;
        }
        bool progressed = false;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            const Symbol s = *it;
            if (r.degree_in(s) != 1) {
                continue;
            }
            const auto unit = unit_factor(r.coefficient_of(s, 1), players == 4);
            if (!unit) {
                continue;
            }
            const auto value = divide_by_term(-r.coefficient_of(s, 0), unit->first, unit->second);
            if (!value) {
                continue;
            }
            for (auto &[sym, prior] : solved) {
                prior = substitute(prior, {{s, *value}});
            }
            solved[s] = *value;
            pending.erase(it);
            progressed = true;
            break;
        }
        if (!progressed) {
            throw NonlinearConstraint("coefficient " + exponent_text(e, m) + " = " + to_string(r));
        }
    }
    if (!pending.empty() && !report.first_nonzero) {
        std::string names;
        for (Symbol s : pending) {
            names += std::string(names.empty() ? "" : ", ") + std::string(name(s));
        }
        throw NonlinearConstraint("unknowns left undetermined at this cap: " + names);
    }
    report.bindings.assign(solved.begin(), solved.end());
    if (players == 2) {
        const Bindings bl = level_relations(2);
        for (Symbol s : {Symbol::beta, Symbol::lambda}) {
            report.reparametrization.emplace_back(s, bl.at(s));
        }
    }
    return report;
}

LevelReport verify_level(int level, int players, int cap)
{
    LevelReport report;
    report.level = level;
    report.players = players;
    report.cap = cap;
    const MultiSeries g = cleared_residual(level_exponential(level, std::max(cap + 1, 5)), players, cap);
    report.first_nonzero = g.first_nonzero();
    return report;
}

} // namespace ellevel
