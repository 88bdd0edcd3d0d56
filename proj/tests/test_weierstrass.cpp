#include <doctest.h>

#include <algorithm>

#include "ellevel/krichever.hpp"
#include "ellevel/weierstrass.hpp"
#include "support/properties.hpp"

using namespace ellevel;

namespace
{

MultiPoly P(const char *text) { return parse_poly(text); }
MultiPoly sym(Symbol s) { return MultiPoly::symbol(s); }

const BakerAkhiezerContext &symbolic_phi()
{
    static const BakerAkhiezerContext ba = phi_series(WeierstrassContext::symbolic(14), 12);
    return ba;
}

} // namespace

TEST_CASE("wp expansion")
{
    const LaurentSeries wp = wp_series(sym(Symbol::g2), sym(Symbol::g3), 12);
    CHECK(wp.pole_order() == 2);
    CHECK(wp.coeff(-2) == MultiPoly(1));
    CHECK(wp.coeff(0).is_zero());
    CHECK(wp.coeff(2) == P("1/20*g2"));
    CHECK(wp.coeff(4) == P("1/28*g3"));
    CHECK(wp.coeff(6) == P("1/1200*g2^2"));
    CHECK(wp.coeff(8) == P("3/6160*g2*g3"));

    const LaurentSeries cusp = wp_series(MultiPoly{}, MultiPoly{}, 12);
    CHECK((cusp - LaurentSeries::monomial(MultiPoly(1), -2)).is_zero());
    CHECK_THROWS_AS(wp_series(MultiPoly{}, MultiPoly{}, 3), std::invalid_argument);
}

TEST_CASE("zeta and sigma")
{
    const WeierstrassContext ctx = WeierstrassContext::symbolic(12);
    CHECK(ctx.zeta.coeff(-1) == MultiPoly(1));
    CHECK(ctx.zeta.coeff(3) == P("-1/60*g2"));
    CHECK(ctx.sigma.coeff(1) == MultiPoly(1));
    CHECK(ctx.sigma.coeff(3).is_zero());
    CHECK(ctx.sigma.coeff(5) == P("-1/240*g2"));
    CHECK(ctx.sigma.coeff(7) == P("-1/840*g3"));
    CHECK((derivative(ctx.zeta) + ctx.wp).is_zero());
    CHECK(derivative(ctx.zeta).trunc() >= 11);
    CHECK((derivative(ctx.sigma) - ctx.zeta * ctx.sigma).is_zero());

    const WeierstrassContext cusp = WeierstrassContext::build(MultiPoly{}, MultiPoly{}, 12);
    CHECK((cusp.zeta - LaurentSeries::monomial(MultiPoly(1), -1)).is_zero());
    CHECK((cusp.sigma - LaurentSeries::variable()).is_zero());
}

TEST_CASE("Weierstrass properties on random invariants")
{
    const auto report = testing::weierstrass_property(100);
    INFO(report.first_failure);
    CHECK(report.passed());
}

TEST_CASE("Baker-Akhiezer function")
{
    const BakerAkhiezerContext &ba = symbolic_phi();
    CHECK(ba.phi.pole_order() == 1);
    CHECK(ba.phi.coeff(-1) == MultiPoly(1));
    CHECK(ba.phi.trunc() >= 12);

    const LaurentSeries lame = lame_residual(ba);
    CHECK(lame.is_zero());
    CHECK(lame.trunc() >= 12 - 3);
    const LaurentSeries log = log_derivative_residual(ba);
    CHECK(log.is_zero());
    CHECK(log.trunc() >= 12 - 3);
    const LaurentSeries phieq = verify_phieq(ba);
    CHECK(phieq.is_zero());
    CHECK(phieq.trunc() >= 12 - 4);

    // without the curve relation at z the residual is not zero
    CHECK_FALSE(phieq_unreduced(ba).is_zero());
    const Bindings on_curve{{Symbol::beta, MultiPoly(1)},
                            {Symbol::gamma, MultiPoly(2)},
                            {Symbol::g2, MultiPoly{}},
                            {Symbol::g3, MultiPoly{}},
                            {Symbol::w, MultiPoly(BigRational(1, 3))}};
    CHECK(substitute(phieq_unreduced(ba), on_curve).is_zero());
    Bindings off_curve = on_curve;
    off_curve[Symbol::gamma] = MultiPoly(3);
    CHECK_FALSE(substitute(phieq_unreduced(ba), off_curve).is_zero());

    CHECK_THROWS_AS(phi_series(WeierstrassContext::build(sym(Symbol::beta), MultiPoly{}, 8), 6), std::invalid_argument);
}

TEST_CASE("Baker-Akhiezer function in the cusp case")
{
    const BakerAkhiezerContext ba = phi_series(WeierstrassContext::build(MultiPoly{}, MultiPoly{}, 10), 8);
    const Bindings origin{{Symbol::beta, MultiPoly{}}, {Symbol::gamma, MultiPoly{}}, {Symbol::w, MultiPoly{}}};
    const LaurentSeries phi = substitute(ba.phi, origin);
    CHECK((phi - LaurentSeries::monomial(MultiPoly(1), -1)).is_zero());
    CHECK(substitute(verify_phieq(ba), origin).is_zero());
}

TEST_CASE("the Krichever exponential from the Baker-Akhiezer function")
{
    const BakerAkhiezerContext &ba = symbolic_phi();
    const LaurentSeries f = fkr_from_phi(ba, sym(Symbol::alpha));
    CHECK(f.coeff(2) == sym(Symbol::alpha));
    CHECK(f.coeff(5) == P("1/120*(5*alpha^4 + 30*alpha^2*beta + 45*beta^2 - 20*alpha*gamma - 3*lambda)"));
    for (int d = 0; d <= f.trunc(); ++d) {
        CHECK_FALSE(f.coeff(d).contains(Symbol::w));
        CHECK_FALSE(f.coeff(d).contains(Symbol::g2));
        CHECK_FALSE(f.coeff(d).contains(Symbol::g3));
    }
    const LaurentSeries ode = fkr_from_ode(KrParams::symbolic(), 12);
    CHECK(vanishes_through(f - ode, 12));

    // the factor e^{-wx} of sigma(z - x) / sigma(z) cancels against e^{wx}, so w never appears
    for (int d = -1; d <= ba.phi.trunc(); ++d) {
        CHECK_FALSE(ba.phi.coeff(d).contains(Symbol::w));
    }
}

TEST_CASE("the cusp case gives x e^{alpha x}")
{
    const BakerAkhiezerContext ba = phi_series(WeierstrassContext::build(MultiPoly{}, MultiPoly{}, 10), 8);
    const LaurentSeries f =
        substitute(fkr_from_phi_raw(ba, sym(Symbol::w)), {{Symbol::beta, MultiPoly{}}, {Symbol::gamma, MultiPoly{}}});
    const LaurentSeries expected = LaurentSeries::variable() * exp(LaurentSeries::monomial(sym(Symbol::w), 1, 8));
    CHECK(f.coeff(1) == MultiPoly(1));
    CHECK(f.coeff(2) == sym(Symbol::w));
    CHECK(f.coeff(3) == P("1/2*w^2"));
    CHECK(vanishes_through(f - expected, std::min(f.trunc(), 8)));
}

TEST_CASE("discriminants of the level invariants")
{
    CHECK(discriminant(P("g2"), P("g3")) == P("g2^3 - 27*g3^2"));
    const auto [g2_2, g3_2] = level_invariants(2);
    CHECK(discriminant(g2_2, g3_2) == P("64*epsilon^2*(delta^2 - epsilon)"));
    const auto [g2_3, g3_3] = level_invariants(3);
    CHECK(discriminant(g2_3, g3_3) == P("-27*(8*alpha^3 + gamma)*gamma^3"));
    const auto [g2_4, g3_4] = level_invariants(4);
    CHECK(discriminant(g2_4, g3_4) == P("256*alpha^2*(5*alpha^2 - 3*beta)*(4*alpha^2 - 3*beta)^4"));
    CHECK(g2_4 == P("4*(32*alpha^4 - 24*alpha^2*beta + 3*beta^2)"));
    CHECK(g3_4 == P("-8*(2*alpha^2 - beta)*(16*alpha^4 - 8*alpha^2*beta - beta^2)"));
}
