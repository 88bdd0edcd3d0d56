#pragma once

#include <string>
#include <vector>

#include "ellevel/krichever.hpp"
#include "ellevel/laurent.hpp"
#include "ellevel/multiseries.hpp"

namespace ellevel
{

/// F(u, v) = f(g(u) + g(v)) with g the compositional inverse of f, to total degree `cap`.
/// Requires f = x + O(x^2).
BivariateSeries fg_from_exp(const LaurentSeries &f, int cap);

/// The exponential of a one-dimensional formal group: g' = 1 / (dF/dv)(u, 0), f = g^-1.
LaurentSeries exp_from_fg(const BivariateSeries &F);

struct AxiomFailure {
    std::string axiom; ///< "unit", "commutativity" or "associativity"
    SeriesExponent exponent;
    MultiPoly residual;
};

struct AxiomReport {
    int cap = 0;       ///< degree to which unit and commutativity were checked
    int assoc_cap = 0; ///< degree to which associativity was checked (cap - 2)
    std::vector<AxiomFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// F(u, 0) = u, F(0, v) = v and F(u, v) = F(v, u) to the cap of F;
/// F(F(u, v), w) = F(u, F(v, w)) to cap - 2.
AxiomReport fg_axiom_check(const BivariateSeries &F);

/// The series A, B of a group F = (u^2 A(v) - v^2 A(u)) / (u B(v) - v B(u)),
/// normalized by A(0) = B(0) = 1, A_2 = B_1 = 0.
struct ABPair {
    LaurentSeries A;
    LaurentSeries B;
    MultiPoly A1;
    MultiPoly B2;
};

/// A1 = 2 f_1, B2 = A1^2 - 3 [x^3] g,
/// B(u) = (f' - A1 f)(g(u)),  A(u) = (2 f'^2 - f f'' - A1 f f' - 2 B2 f^2)(g(u)) / 2.
/// With f known through x^N, A and B are exact through u^(N-1).
ABPair extract_AB(const LaurentSeries &f);

/// (u^2 A(v) - v^2 A(u)) / (u B(v) - v B(u)) as a bivariate series.
BivariateSeries fg_from_AB(const ABPair &ab, int cap);

/// F (u B(v) - v B(u)) - (u^2 A(v) - v^2 A(u)).
BivariateSeries buchstaber_residual(const BivariateSeries &F, const ABPair &ab);

/// level 2: A - 1
/// level 3: B - A^2 + 2 A1 u
/// level 4: (2B + 3 A1 u)^2 - 4 A^3 + (3 A1^2 - 8 B2) u^2 A^2
LaurentSeries level_form_residual(int level, const ABPair &ab);

/// 4 (2f' + A1 f)^2 - (4f'^2 - 2 f f'' - 2 A1 f f' - (3 A1^2 - 4 B2) f^2)
///                    (2f'^2 - f f'' - A1 f f' - 2 B2 f^2)^2
LaurentSeries end_equation_residual(const LaurentSeries &f, const MultiPoly &A1, const MultiPoly &B2);

/// Solves end_equation_residual = 0 coefficientwise for symbolic A1, B2, starting from
/// f = x + (A1/2) x^2 + (B2 + A1^2/2)/3 x^3. Each f_k (coefficient of x^(k+1)) is fixed
/// by the residual at x^k; the factors are recorded in `steps`.
LaurentSeries end_equation_solution(int order, std::vector<SolvedStep> *steps = nullptr);

} // namespace ellevel
