#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellevel/laurent.hpp"
#include "ellevel/multiseries.hpp"

namespace ellevel
{

/// Denominator-cleared form of the special functional equation
///   sum_i prod_{j != i} 1 / f(x_j - x_i) = 0
/// for N players, in the gauge x_1 = 0 (variables x_2 .. x_N):
///   G = sum_i prod_{k != i} H_k,   H_k = prod_{j != k} f(x_j - x_k).
///
/// G starts in total degree (N-1)^2, and `cap` counts degrees beyond that:
/// the result is exact through total degree (N-1)^2 + cap and needs f through x^(cap+1).
MultiSeries cleared_residual(const LaurentSeries &f, int players, int cap);

/// Total degree of the lowest possible term of cleared_residual.
int cleared_base_degree(int players);

struct ConstraintReport {
    int players = 0;
    int cap = 0;
    /// Solved unknowns, sorted by symbol.
    std::vector<std::pair<Symbol, MultiPoly>> bindings;
    /// Level-2 only: beta and lambda in terms of delta, epsilon.
    std::vector<std::pair<Symbol, MultiPoly>> reparametrization;
    /// Coefficients of G that vanish under the bindings without having been used to solve.
    int redundant_checks = 0;
    /// Set when a coefficient survives after every unknown is solved.
    std::optional<std::pair<SeriesExponent, MultiPoly>> first_nonzero;

    bool consistent() const { return !first_nonzero.has_value(); }
};

/// Error for a coefficient that no remaining unknown enters linearly with a unit factor.
class NonlinearConstraint : public std::runtime_error
{
public:
    explicit NonlinearConstraint(const std::string &detail);
};

/// Runs cleared_residual on the fully symbolic Krichever exponential and eliminates
/// unknowns one coefficient at a time. Unknowns, in order of preference:
///   N = 2: alpha, gamma    N = 3: beta, lambda    N = 4: gamma, lambda
/// A factor counts as a unit if it is a nonzero rational; for N = 4 also a rational
/// times a power of alpha (the branch alpha != 0).
ConstraintReport derive_constraints(int players, int cap);

struct LevelReport {
    int level = 0;
    int players = 0;
    int cap = 0;
    std::optional<std::pair<SeriesExponent, MultiPoly>> first_nonzero;

    bool zero() const { return !first_nonzero.has_value(); }
};

/// cleared_residual of the level's exponential, with its first nonzero coefficient if any.
LevelReport verify_level(int level, int players, int cap);

/// Direct univariate evaluation of G on the line x_1 = 0, x_{i+1} = dirs[i] t, through t^((N-1)^2 + cap).
LaurentSeries cleared_residual_on_line(const LaurentSeries &f, std::span<const BigRational> dirs, int cap);

} // namespace ellevel
