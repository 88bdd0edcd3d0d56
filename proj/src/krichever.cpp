#include "ellevel/krichever.hpp"

#include <stdexcept>
#include <string>

namespace ellevel
{

namespace
{

MultiPoly sym(Symbol s) { return MultiPoly::symbol(s); }

MultiPoly q(long n, long d = 1) { return MultiPoly(BigRational(n, d)); }

void check_level(int level)
{
    if (level < 2 || level > 4) {
        throw std::invalid_argument("level must be 2, 3 or 4, got " + std::to_string(level));
    }
}

} // namespace

KrParams KrParams::substituted(const Bindings &b) const
{
    return {substitute(alpha, b), substitute(beta, b), substitute(gamma, b), substitute(lambda, b)};
}

OdeConstants kr_ode_constants(const KrParams &p)
{
    const MultiPoly &a = p.alpha;
    return {
        q(-6) * a,
        q(6) * a * a - q(6) * p.beta,
        q(2) * p.gamma + q(6) * a * p.beta - q(2) * pow(a, 3),
    };
}

std::array<MultiPoly, 5> kr_seed_coefficients(const KrParams &p)
{
    const MultiPoly &a = p.alpha;
    const MultiPoly &b = p.beta;
    const MultiPoly &g = p.gamma;
    const MultiPoly &l = p.lambda;
    return {
        q(1),
        a,
        (a * a + b) * BigRational(1, 2),
        (pow(a, 3) + q(3) * a * b - g) * BigRational(1, 6),
        (q(5) * pow(a, 4) + q(30) * a * a * b + q(45) * b * b - q(20) * a * g - q(3) * l) * BigRational(1, 120),
    };
}

LaurentSeries feq_residual(const LaurentSeries &f, const OdeConstants &c)
{
    const LaurentSeries d1 = derivative(f);
    const LaurentSeries d2 = derivative(d1);
    const LaurentSeries d3 = derivative(d2);
    return f * d3 - (d1 * d2) * MultiPoly(3) - (d1 * d1) * c.c1 - (f * d1) * c.c2 - (f * f) * c.c3;
}

LaurentSeries jacobi_residual(const LaurentSeries &f, const MultiPoly &delta, const MultiPoly &epsilon)
{
    const LaurentSeries d1 = derivative(f);
    const LaurentSeries f2 = f * f;
    return d1 * d1 - LaurentSeries::constant(MultiPoly(1)) + f2 * (q(2) * delta) - (f2 * f2) * epsilon;
}

LaurentSeries solve_coefficientwise(const LaurentSeries &seed, int order, int shift,
                                    const std::function<LaurentSeries(const LaurentSeries &)> &residual,
                                    std::vector<SolvedStep> *steps)
{
    if (seed.is_exact()) {
        throw SeriesError("solve_coefficientwise: seed must carry its truncation order");
    }
    if (seed.valuation() < 0) {
        throw SeriesError("solve_coefficientwise: seed must be a power series");
    }
    std::vector<MultiPoly> coeffs;
    for (int d = 0; d <= seed.trunc(); ++d) {
        coeffs.push_back(seed.coeff(d));
    }
    for (int n = seed.trunc() + 1; n <= order; ++n) {
        coeffs.emplace_back();
        const LaurentSeries trial0 = LaurentSeries::from_coeffs(0, coeffs, n);
        coeffs.back() = MultiPoly(1);
        const LaurentSeries trial1 = LaurentSeries::from_coeffs(0, coeffs, n);
        const MultiPoly r0 = residual(trial0).coeff(n + shift);
        const MultiPoly r1 = residual(trial1).coeff(n + shift);
        const auto factor = (r1 - r0).as_constant();
        if (!factor || factor->is_zero()) {
            throw SeriesError("coefficient of x^" + std::to_string(n) +
                              " is not determined linearly by the residual (factor " + to_string(r1 - r0) + ")");
        }
        coeffs.back() = r0 * (-factor->inverse());
        if (steps != nullptr) {
            steps->push_back({n, *factor});
        }
    }
    return LaurentSeries::from_coeffs(0, std::move(coeffs), order);
}

LaurentSeries fkr_from_ode(const KrParams &p, int order)
{
    if (order < 5) {
        throw std::invalid_argument("fkr_from_ode: order must be at least 5");
    }
    const auto seeds = kr_seed_coefficients(p);
    std::vector<MultiPoly> coeffs{MultiPoly{}};
    coeffs.insert(coeffs.end(), seeds.begin(), seeds.end());
    const LaurentSeries seed = LaurentSeries::from_coeffs(0, std::move(coeffs), 5);
    const OdeConstants c = kr_ode_constants(p);
    return solve_coefficientwise(seed, order, -2, [&](const LaurentSeries &f) { return feq_residual(f, c); });
}

Bindings level_relations(int level)
{
    check_level(level);
    const MultiPoly a = sym(Symbol::alpha);
    const MultiPoly b = sym(Symbol::beta);
    const MultiPoly g = sym(Symbol::gamma);
    const MultiPoly d = sym(Symbol::delta);
    const MultiPoly e = sym(Symbol::epsilon);
    switch (level) {
    case 2:
        return {
            {Symbol::alpha, q(0)},
            {Symbol::beta, q(-2, 3) * d},
            {Symbol::gamma, q(0)},
            {Symbol::lambda, q(16, 3) * d * d - q(4) * e},
        };
    case 3:
        return {
            {Symbol::beta, q(3) * a * a},
            {Symbol::lambda, q(12) * a * (q(9) * pow(a, 3) + g)},
        };
    default:
        return {
            {Symbol::gamma, q(4) * a * (q(4) * a * a - q(3) * b)},
            {Symbol::lambda, q(4) * (q(32) * pow(a, 4) - q(24) * a * a * b + q(3) * b * b)},
        };
    }
}

LaurentSeries level_exponential(int level, int order)
{
    return fkr_from_ode(KrParams::symbolic().substituted(level_relations(level)), order);
}

std::pair<MultiPoly, MultiPoly> kr_invariants(const KrParams &p)
{
    return {p.lambda, q(4) * pow(p.beta, 3) - p.lambda * p.beta - p.gamma * p.gamma};
}

std::pair<MultiPoly, MultiPoly> level_invariants(int level)
{
    return kr_invariants(KrParams::symbolic().substituted(level_relations(level)));
}

MultiPoly level_discriminant_formula(int level)
{
    check_level(level);
    const MultiPoly a = sym(Symbol::alpha);
    const MultiPoly b = sym(Symbol::beta);
    const MultiPoly g = sym(Symbol::gamma);
    const MultiPoly d = sym(Symbol::delta);
    const MultiPoly e = sym(Symbol::epsilon);
    switch (level) {
    case 2:
        return q(64) * e * e * (d * d - e);
    case 3:
        return q(-27) * (q(8) * pow(a, 3) + g) * pow(g, 3);
    default:
        return q(256) * a * a * (q(5) * a * a - q(3) * b) * pow(q(4) * a * a - q(3) * b, 4);
    }
}

} // namespace ellevel
