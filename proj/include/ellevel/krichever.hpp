#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "ellevel/laurent.hpp"
#include "ellevel/poly.hpp"

namespace ellevel
{

/// Constants of the third-order equation
///   f f''' - 3 f' f'' = C1 f'^2 + C2 f f' + C3 f^2.
struct OdeConstants {
    MultiPoly c1;
    MultiPoly c2;
    MultiPoly c3;
};

/// The four parameters of the Krichever exponential: alpha, beta = wp(z), gamma = wp'(z), lambda = g2.
struct KrParams {
    MultiPoly alpha = MultiPoly::symbol(Symbol::alpha);
    MultiPoly beta = MultiPoly::symbol(Symbol::beta);
    MultiPoly gamma = MultiPoly::symbol(Symbol::gamma);
    MultiPoly lambda = MultiPoly::symbol(Symbol::lambda);

    static KrParams symbolic() { return {}; }
    KrParams substituted(const Bindings &b) const;
};

/// C1 = -6 alpha, C2 = 6 alpha^2 - 6 beta, C3 = 2 gamma + 6 alpha beta - 2 alpha^3.
OdeConstants kr_ode_constants(const KrParams &p);

/// Coefficients of x^1 .. x^5 of the Krichever exponential, in closed form.
std::array<MultiPoly, 5> kr_seed_coefficients(const KrParams &p);

/// Krichever exponential through x^order: the five closed-form seeds, then the
/// unique continuation of the ODE, where x^(k+1) enters at x^(k-1) with factor (k+1) k (k-4).
LaurentSeries fkr_from_ode(const KrParams &p, int order);

/// f f''' - 3 f' f'' - C1 f'^2 - C2 f f' - C3 f^2.
LaurentSeries feq_residual(const LaurentSeries &f, const OdeConstants &c);

/// f'^2 - 1 + 2 delta f^2 - epsilon f^4.
LaurentSeries jacobi_residual(const LaurentSeries &f, const MultiPoly &delta, const MultiPoly &epsilon);

/// One coefficient fixed by a residual that is linear in it.
struct SolvedStep {
    int degree;         ///< degree of the solved coefficient of f
    BigRational factor; ///< coefficient of the unknown in the residual
};

/// Extends `seed` (known through seed.trunc()) to `order`, solving each new
/// coefficient of x^n from the residual coefficient at degree n + shift. The
/// residual must depend on that coefficient linearly with a nonzero rational
/// factor; otherwise SeriesError is thrown.
LaurentSeries solve_coefficientwise(const LaurentSeries &seed, int order, int shift,
                                    const std::function<LaurentSeries(const LaurentSeries &)> &residual,
                                    std::vector<SolvedStep> *steps = nullptr);

/// Parameter relations cutting the Krichever family down to levels 2, 3 and 4.
///   level 2: alpha = 0, beta = -2 delta / 3, gamma = 0, lambda = 16 delta^2 / 3 - 4 epsilon
///   level 3: beta = 3 alpha^2, lambda = 12 alpha (9 alpha^3 + gamma)
///   level 4: gamma = 4 alpha (4 alpha^2 - 3 beta), lambda = 4 (32 alpha^4 - 24 alpha^2 beta + 3 beta^2)
Bindings level_relations(int level);

/// Elliptic function of the given level as a series through x^order.
LaurentSeries level_exponential(int level, int order);

/// Weierstrass invariants of the Krichever family: g2 = lambda, g3 = 4 beta^3 - lambda beta - gamma^2.
std::pair<MultiPoly, MultiPoly> kr_invariants(const KrParams &p = {});

/// kr_invariants with the level relations applied.
std::pair<MultiPoly, MultiPoly> level_invariants(int level);

/// Factored discriminant formula stated for each level.
MultiPoly level_discriminant_formula(int level);

} // namespace ellevel
