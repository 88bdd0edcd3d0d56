#include <doctest.h>

#include "ellevel/krichever.hpp"
#include "ellevel/laurent.hpp"
#include "support/properties.hpp"

using namespace ellevel;

namespace
{

MultiPoly P(const char *text) { return parse_poly(text); }
MultiPoly sym(Symbol s) { return MultiPoly::symbol(s); }
LaurentSeries x_(int trunc = kExact) { return LaurentSeries::variable(trunc); }
LaurentSeries mono(const char *c, int d, int trunc = kExact) { return LaurentSeries::monomial(P(c), d, trunc); }

} // namespace

TEST_CASE("series arithmetic")
{
    const LaurentSeries f = x_() + mono("alpha", 2);
    CHECK(f * x_() == mono("1", 2) + mono("alpha", 3));
    CHECK(derivative(f) == LaurentSeries::constant(MultiPoly(1)) + mono("2*alpha", 1));
    CHECK(derivative(mono("1", -1)) == mono("-1", -2));

    // 1 / (x - delta x^3 / 3 + ...), multiplied back
    const LaurentSeries g = x_(9) - mono("1/3*delta", 3, 9) + mono("1/30*(delta^2 + 3*epsilon)", 5, 9);
    const LaurentSeries inv = inverse(g);
    CHECK(inv.pole_order() == 1);
    CHECK(inv.coeff(-1) == MultiPoly(1));
    CHECK(inv.coeff(1) == P("1/3*delta"));
    const LaurentSeries one = inv * g;
    CHECK(vanishes_through(one - LaurentSeries::constant(MultiPoly(1)), one.trunc()));
    CHECK(one.trunc() >= 7);

    CHECK_THROWS_AS(inverse(mono("alpha", 1, 5)), SeriesError);
    CHECK_THROWS_AS(LaurentSeries::constant(MultiPoly(1)) / LaurentSeries::zero(4), SeriesError);
    CHECK_THROWS_AS(integrate(mono("1", -1)), SeriesError);
    CHECK(integrate(mono("1", 2)) == mono("1/3", 3));
}

TEST_CASE("truncation orders follow the propagation rule")
{
    const LaurentSeries f = x_(5) + mono("alpha", 2, 5);  // valuation 1, known through 5
    const LaurentSeries g = mono("1", 2, 3);              // valuation 2, known through 3
    CHECK((f * g).trunc() == std::min(5 + 2, 3 + 1));
    CHECK((f + g).trunc() == 3);
    CHECK((f * LaurentSeries::variable()).trunc() == 6);
    CHECK(derivative(f).trunc() == 4);
    CHECK(integrate(f).trunc() == 6);
    CHECK_THROWS_AS(g.coeff(4), SeriesError);
    const LaurentSeries h = inverse(f);
    CHECK(h.trunc() == 5 - 2);
}

TEST_CASE("composition, reversion and exponential")
{
    const LaurentSeries f = x_(8) + mono("alpha", 2, 8);
    const LaurentSeries g = reversion(f);
    CHECK(g.coeff(2) == P("-alpha"));
    CHECK(g.coeff(3) == P("2*alpha^2"));
    CHECK(g.coeff(4) == P("-5*alpha^3"));
    CHECK(vanishes_through(compose(g, f) - x_(), 8));

    const LaurentSeries e = exp(mono("alpha", 1, 10)) * exp(mono("-alpha", 1, 10));
    CHECK(vanishes_through(e - LaurentSeries::constant(MultiPoly(1)), 10));
    const LaurentSeries s = mono("alpha", 1, 10) + mono("beta", 3, 10);
    CHECK(vanishes_through(derivative(exp(s)) - derivative(s) * exp(s), 9));

    CHECK_THROWS_AS(reversion(mono("2", 1, 5)), SeriesError);
    CHECK_THROWS_AS(exp(LaurentSeries::constant(MultiPoly(1), 5)), SeriesError);
    CHECK_THROWS_AS(compose(mono("1", -1, 5), x_(5)), SeriesError);
}

TEST_CASE("reversion round trips on random exponentials")
{
    const auto report = testing::reversion_property(120);
    INFO(report.first_failure);
    CHECK(report.instances == 120);
    CHECK(report.passed());
}

TEST_CASE("the Krichever exponential from the ODE")
{
    const LaurentSeries f = fkr_from_ode(KrParams::symbolic(), 12);
    CHECK(f.trunc() == 12);
    CHECK(f.coeff(0).is_zero());
    CHECK(f.coeff(1) == MultiPoly(1));
    CHECK(f.coeff(2) == sym(Symbol::alpha));
    CHECK(f.coeff(3) == P("1/2*(alpha^2 + beta)"));
    CHECK(f.coeff(4) == P("1/6*(alpha^3 + 3*alpha*beta - gamma)"));
    CHECK(f.coeff(5) == P("1/120*(5*alpha^4 + 30*alpha^2*beta + 45*beta^2 - 20*alpha*gamma - 3*lambda)"));
    CHECK(f.coeff(6) == P("1/120*(alpha^5 + 10*alpha^3*beta + 45*alpha*beta^2 - 10*alpha^2*gamma - 22*beta*gamma - "
                          "3*alpha*lambda)"));
    for (int d = 1; d <= 12; ++d) {
        for (Symbol s : {Symbol::g2, Symbol::g3, Symbol::w, Symbol::delta}) {
            CHECK_FALSE(f.coeff(d).contains(s));
        }
    }

    KrParams zero;
    zero.alpha = zero.beta = zero.gamma = zero.lambda = MultiPoly{};
    const LaurentSeries trivial = fkr_from_ode(zero, 12);
    CHECK(trivial == x_().truncated(12));
    CHECK_THROWS_AS(fkr_from_ode(KrParams::symbolic(), 4), std::invalid_argument);
}

TEST_CASE("ODE residuals")
{
    const KrParams p = KrParams::symbolic();
    const LaurentSeries f = fkr_from_ode(p, 12);
    const LaurentSeries r = feq_residual(f, kr_ode_constants(p));
    CHECK(r.is_zero());
    CHECK(r.trunc() >= 9);

    CHECK(feq_residual(x_(), {}).is_zero());

    const LaurentSeries f4 = level_exponential(4, 12);
    const OdeConstants c4{P("-6*alpha"), P("6*(alpha^2 - beta)"), P("6*alpha*(5*alpha^2 - 3*beta)")};
    CHECK(feq_residual(f4, c4).is_zero());
    // a wrong constant is detected
    const OdeConstants wrong{P("-6*alpha"), P("6*(alpha^2 - beta)"), P("6*alpha*(5*alpha^2 - 2*beta)")};
    CHECK_FALSE(feq_residual(f4, wrong).is_zero());

    const LaurentSeries jac = x_(5) - mono("1/3*delta", 3, 5) + mono("1/30*(delta^2 + 3*epsilon)", 5, 5);
    const LaurentSeries jr = jacobi_residual(jac, sym(Symbol::delta), sym(Symbol::epsilon));
    CHECK(vanishes_through(jr, 4));
    CHECK(jacobi_residual(x_(), MultiPoly{}, MultiPoly{}).is_zero());

    const LaurentSeries f2 = substitute(f, level_relations(2));
    const LaurentSeries j2 = jacobi_residual(f2, sym(Symbol::delta), sym(Symbol::epsilon));
    CHECK(vanishes_through(j2, 11));
}

TEST_CASE("the recursion is determined by the first five coefficients")
{
    testing::Generator gen;
    for (int i = 0; i < 100; ++i) {
        KrParams p;
        p.alpha = MultiPoly(gen.rational());
        p.beta = MultiPoly(gen.rational());
        p.gamma = MultiPoly(gen.rational());
        p.lambda = MultiPoly(gen.rational());
        const LaurentSeries f = fkr_from_ode(p, 12);
        const OdeConstants c = kr_ode_constants(p);
        std::vector<SolvedStep> steps;
        const LaurentSeries again =
            solve_coefficientwise(f.truncated(5), 12, -2, [&](const LaurentSeries &s) { return feq_residual(s, c); },
                                  &steps);
        CHECK(again == f);
        REQUIRE(steps.size() == 7);
        for (const auto &s : steps) {
            const long k = s.degree - 1;
            CHECK(s.factor == BigRational((k + 1) * k * (k - 4)));
        }
    }
}

TEST_CASE("numeric evaluation")
{
    const std::map<Symbol, std::complex<double>> none;
    CHECK(std::abs(eval(x_(), none, 0.5) - 0.5) < 1e-15);
    KrParams zero;
    zero.alpha = zero.beta = zero.gamma = zero.lambda = MultiPoly{};
    CHECK(std::abs(eval(fkr_from_ode(zero, 12), none, {0.3, 0.1}) - std::complex<double>(0.3, 0.1)) < 1e-15);
    CHECK_THROWS_AS(eval(mono("alpha", 1), none, 0.1), UnboundSymbol);
    // f2 at delta = epsilon = 1 is tanh
    const LaurentSeries th = substitute(level_exponential(2, 12), {{Symbol::delta, 1}, {Symbol::epsilon, 1}});
    CHECK(std::abs(eval(th, none, 0.05) - std::tanh(0.05)) < 1e-15);
}
