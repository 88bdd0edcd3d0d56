#pragma once

#include <utility>

#include "ellevel/laurent.hpp"
#include "ellevel/poly.hpp"

namespace ellevel
{

/// Expansions at x = 0 of the Weierstrass functions for formal invariants (g2, g3).
///
///   wp    = x^-2 + g2/20 x^2 + g3/28 x^4 + ...   (even)
///   zeta  = x^-1 - g2/60 x^3 - ...               (odd, zeta' = -wp)
///   sigma = x - g2/240 x^5 - ...                 (odd, (ln sigma)' = zeta)
///
/// Degenerate invariants (discriminant zero) are allowed.
struct WeierstrassContext {
    MultiPoly g2;
    MultiPoly g3;
    int order = 0;
    LaurentSeries wp;
    LaurentSeries wp_prime;
    LaurentSeries zeta;
    LaurentSeries sigma;

    static WeierstrassContext build(const MultiPoly &g2, const MultiPoly &g3, int order);
    /// Generic context over the symbols g2, g3.
    static WeierstrassContext symbolic(int order);
};

/// wp through x^order from the even-coefficient recursion
///   c_k = 3 / ((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m},  c_2 = g2/20, c_3 = g3/28.
LaurentSeries wp_series(const MultiPoly &g2, const MultiPoly &g3, int order);

/// (zeta, sigma) from the context's wp.
std::pair<LaurentSeries, LaurentSeries> zeta_sigma_series(const WeierstrassContext &ctx);

/// g2^3 - 27 g3^2.
MultiPoly discriminant(const MultiPoly &g2, const MultiPoly &g3);

/// Baker-Akhiezer function Phi(x; z) = sigma(z - x) / (sigma(x) sigma(z)) * exp(zeta(z) x),
/// expanded in x with coefficients in Q[w, beta, gamma, g2, g3] where w = zeta(z),
/// beta = wp(z), gamma = wp'(z).
struct BakerAkhiezerContext {
    WeierstrassContext base;
    LaurentSeries phi;
};

/// The context's invariants must not involve w, beta or gamma.
BakerAkhiezerContext phi_series(const WeierstrassContext &ctx, int order);

/// Rewrites gamma^2 as 4 beta^3 - g2 beta - g3 (the curve relation at the point z).
MultiPoly reduce_point_relation(const MultiPoly &p, const MultiPoly &g2, const MultiPoly &g3);
LaurentSeries reduce_point_relation(const LaurentSeries &f, const MultiPoly &g2, const MultiPoly &g3);

/// Phi'' - 2 wp Phi - beta Phi, reduced.
LaurentSeries lame_residual(const BakerAkhiezerContext &ba);
/// 2 (wp - beta) Phi' - (wp' + gamma) Phi, reduced.
LaurentSeries log_derivative_residual(const BakerAkhiezerContext &ba);
/// Phi Phi''' - 3 Phi' Phi'' + 6 beta Phi Phi' + 2 gamma Phi^2, reduced.
LaurentSeries verify_phieq(const BakerAkhiezerContext &ba);
/// Same combination without the curve-relation reduction.
LaurentSeries phieq_unreduced(const BakerAkhiezerContext &ba);

/// exp(alpha x) / Phi with g2 -> lambda and g3 -> 4 beta^3 - lambda beta - gamma^2,
/// giving the Krichever exponential over Q[alpha, beta, gamma, lambda].
LaurentSeries fkr_from_phi(const BakerAkhiezerContext &ba, const MultiPoly &alpha);

/// exp(alpha x) / Phi before the invariant substitution (coefficients may involve w).
LaurentSeries fkr_from_phi_raw(const BakerAkhiezerContext &ba, const MultiPoly &alpha);

} // namespace ellevel
