#include "ellevel/weierstrass.hpp"

#include <stdexcept>
#include <vector>

namespace ellevel
{

LaurentSeries wp_series(const MultiPoly &g2, const MultiPoly &g3, int order)
{
    if (order < 4) {
        throw std::invalid_argument("wp_series: order must be at least 4");
    }
    // c[k] multiplies x^(2k-2)
    const int kmax = (order + 2) / 2;
    std::vector<MultiPoly> c(static_cast<std::size_t>(kmax + 1));
    c[2] = g2 * BigRational(1, 20);
    if (kmax >= 3) {
        c[3] = g3 * BigRational(1, 28);
    }
    for (int k = 4; k <= kmax; ++k) {
        PolyAccumulator acc;
        for (int m = 2; m <= k - 2; ++m) {
            acc.add_product(c[static_cast<std::size_t>(m)], c[static_cast<std::size_t>(k - m)],
                            BigRational(3, (2L * k + 1) * (k - 3)));
        }
        c[static_cast<std::size_t>(k)] = acc.take();
    }
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(order + 3));
    coeffs[0] = MultiPoly(1);
    for (int k = 2; k <= kmax; ++k) {
        const int deg = 2 * k - 2;
        if (deg <= order) {
            coeffs[static_cast<std::size_t>(deg + 2)] = c[static_cast<std::size_t>(k)];
        }
    }
    return LaurentSeries::from_coeffs(-2, std::move(coeffs), order);
}

std::pair<LaurentSeries, LaurentSeries> zeta_sigma_series(const WeierstrassContext &ctx)
{
    const LaurentSeries inv_x2 = LaurentSeries::monomial(MultiPoly(1), -2);
    const LaurentSeries inv_x = LaurentSeries::monomial(MultiPoly(1), -1);
    const LaurentSeries regular_zeta = -integrate(ctx.wp - inv_x2);
    const LaurentSeries zeta = inv_x + regular_zeta;
    const LaurentSeries sigma = exp(integrate(regular_zeta)).shifted(1);
    return {zeta, sigma};
}

WeierstrassContext WeierstrassContext::build(const MultiPoly &g2, const MultiPoly &g3, int order)
{
    WeierstrassContext ctx;
    ctx.g2 = g2;
    ctx.g3 = g3;
    ctx.order = order;
    ctx.wp = wp_series(g2, g3, order);
    ctx.wp_prime = derivative(ctx.wp);
    std::tie(ctx.zeta, ctx.sigma) = zeta_sigma_series(ctx);
    return ctx;
}

WeierstrassContext WeierstrassContext::symbolic(int order)
{
    return build(MultiPoly::symbol(Symbol::g2), MultiPoly::symbol(Symbol::g3), order);
}

MultiPoly discriminant(const MultiPoly &g2, const MultiPoly &g3)
{
    return pow(g2, 3) - MultiPoly(27) * g3 * g3;
}

MultiPoly reduce_point_relation(const MultiPoly &p, const MultiPoly &g2, const MultiPoly &g3)
{
    const MultiPoly beta = MultiPoly::symbol(Symbol::beta);
    const MultiPoly rhs = MultiPoly(4) * pow(beta, 3) - g2 * beta - g3;
    return reduce_power(p, Symbol::gamma, 2, rhs);
}

LaurentSeries reduce_point_relation(const LaurentSeries &f, const MultiPoly &g2, const MultiPoly &g3)
{
    return f.map_coeffs([&](const MultiPoly &c) { return reduce_point_relation(c, g2, g3); });
}

BakerAkhiezerContext phi_series(const WeierstrassContext &ctx_in, int order)
{
    for (Symbol s : {Symbol::w, Symbol::beta, Symbol::gamma}) {
        if (ctx_in.g2.contains(s) || ctx_in.g3.contains(s)) {
            throw std::invalid_argument("phi_series: invariants must not involve the point symbols w, beta, gamma");
        }
    }
    // 1/sigma loses two orders relative to sigma.
    WeierstrassContext ctx = ctx_in.sigma.trunc() >= order + 2
                                 ? ctx_in
                                 : WeierstrassContext::build(ctx_in.g2, ctx_in.g3, order);
    const MultiPoly w = MultiPoly::symbol(Symbol::w);
    const MultiPoly beta = MultiPoly::symbol(Symbol::beta);
    const MultiPoly gamma = MultiPoly::symbol(Symbol::gamma);
    // d/dz acting on Q[w, beta, gamma]: zeta' = -wp, wp' = wp', wp'' = 6 wp^2 - g2/2
    const Bindings dz = {
        {Symbol::w, -beta},
        {Symbol::beta, gamma},
        {Symbol::gamma, MultiPoly(6) * beta * beta - ctx.g2 * BigRational(1, 2)},
    };
    // s_k = sigma^(k)(z) / sigma(z); s_{k+1} = d/dz s_k + w s_k
    const int n_shift = order + 1;
    std::vector<MultiPoly> shift_coeffs(static_cast<std::size_t>(n_shift + 1));
    MultiPoly s(1);
    BigRational inv_fact(1);
    for (int k = 0; k <= n_shift; ++k) {
        if (k > 0) {
            s = reduce_point_relation(apply_derivation(s, dz) + w * s, ctx.g2, ctx.g3);
            inv_fact *= BigRational(1, k);
        }
        const BigRational sign = (k % 2 == 0) ? BigRational(1) : BigRational(-1);
        shift_coeffs[static_cast<std::size_t>(k)] = s * (sign * inv_fact);
    }
    const LaurentSeries shifted_sigma = LaurentSeries::from_coeffs(0, std::move(shift_coeffs), n_shift);
    const LaurentSeries ewx = exp(LaurentSeries::monomial(w, 1, n_shift));
    LaurentSeries phi = (shifted_sigma * ewx) * inverse(ctx.sigma.truncated(order + 2));
    phi = reduce_point_relation(phi.truncated(order), ctx.g2, ctx.g3);
    return {std::move(ctx), std::move(phi)};
}

LaurentSeries lame_residual(const BakerAkhiezerContext &ba)
{
    const MultiPoly beta = MultiPoly::symbol(Symbol::beta);
    const LaurentSeries &phi = ba.phi;
    const LaurentSeries r = derivative(derivative(phi)) - (ba.base.wp * phi) * MultiPoly(2) - phi * beta;
    return reduce_point_relation(r, ba.base.g2, ba.base.g3);
}

LaurentSeries log_derivative_residual(const BakerAkhiezerContext &ba)
{
    const MultiPoly beta = MultiPoly::symbol(Symbol::beta);
    const MultiPoly gamma = MultiPoly::symbol(Symbol::gamma);
    const LaurentSeries &phi = ba.phi;
    const LaurentSeries lhs = ((ba.base.wp - LaurentSeries::constant(beta)) * derivative(phi)) * MultiPoly(2);
    const LaurentSeries rhs = (ba.base.wp_prime + LaurentSeries::constant(gamma)) * phi;
    return reduce_point_relation(lhs - rhs, ba.base.g2, ba.base.g3);
}

LaurentSeries phieq_unreduced(const BakerAkhiezerContext &ba)
{
    const MultiPoly beta = MultiPoly::symbol(Symbol::beta);
    const MultiPoly gamma = MultiPoly::symbol(Symbol::gamma);
    const LaurentSeries &phi = ba.phi;
    const LaurentSeries d1 = derivative(phi);
    const LaurentSeries d2 = derivative(d1);
    const LaurentSeries d3 = derivative(d2);
    return phi * d3 - (d1 * d2) * MultiPoly(3) + (phi * d1) * (MultiPoly(6) * beta) +
           (phi * phi) * (MultiPoly(2) * gamma);
}

LaurentSeries verify_phieq(const BakerAkhiezerContext &ba)
{
    return reduce_point_relation(phieq_unreduced(ba), ba.base.g2, ba.base.g3);
}

LaurentSeries fkr_from_phi_raw(const BakerAkhiezerContext &ba, const MultiPoly &alpha)
{
    const int n = ba.phi.trunc();
    const LaurentSeries eax = exp(LaurentSeries::monomial(alpha, 1, n));
    const LaurentSeries f = (eax * inverse(ba.phi)).truncated(n);
    return reduce_point_relation(f, ba.base.g2, ba.base.g3);
}

LaurentSeries fkr_from_phi(const BakerAkhiezerContext &ba, const MultiPoly &alpha)
{
    const MultiPoly beta = MultiPoly::symbol(Symbol::beta);
    const MultiPoly gamma = MultiPoly::symbol(Symbol::gamma);
    const MultiPoly lambda = MultiPoly::symbol(Symbol::lambda);
    Bindings to_kr;
    if (ba.base.g2 == MultiPoly::symbol(Symbol::g2)) {
        to_kr[Symbol::g2] = lambda;
    }
    if (ba.base.g3 == MultiPoly::symbol(Symbol::g3)) {
        to_kr[Symbol::g3] = MultiPoly(4) * pow(beta, 3) - lambda * beta - gamma * gamma;
    }
    return substitute(fkr_from_phi_raw(ba, alpha), to_kr);
}

} // namespace ellevel
