#include <doctest.h>

#include "ellevel/poly.hpp"
#include "support/properties.hpp"

using namespace ellevel;

namespace
{

MultiPoly P(const char *text) { return parse_poly(text); }
MultiPoly sym(Symbol s) { return MultiPoly::symbol(s); }

} // namespace

TEST_CASE("rationals are kept in lowest terms with a positive denominator")
{
    const BigRational r(6, -4);
    CHECK(r.to_string() == "-3/2");
    CHECK(BigRational(0, 7).to_string() == "0");
    CHECK(BigRational(10, 5).is_integer());
    CHECK(BigRational::parse("-12/8") == BigRational(-3, 2));
    CHECK_THROWS_AS(BigRational(1, 0), std::domain_error);
    CHECK_THROWS_AS(BigRational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(BigRational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational(0).inverse(), std::domain_error);
    CHECK(BigRational(2, 3) * BigRational(3, 2) == BigRational(1));
    CHECK(BigRational(1, 3) < BigRational(1, 2));
}

TEST_CASE("polynomial arithmetic")
{
    const MultiPoly a = sym(Symbol::alpha);
    const MultiPoly b = sym(Symbol::beta);
    CHECK((a + (-a)).is_zero());
    CHECK((a + b) * (a - b) == a * a - b * b);

    // the discriminant of the generic curve contains the square of g3
    const MultiPoly g3 = P("4*beta^3 - lambda*beta - gamma^2");
    const MultiPoly delta = pow(sym(Symbol::lambda), 3) - MultiPoly(27) * pow(g3, 2);
    CHECK(delta.coefficient_of(Symbol::gamma, 4) == MultiPoly(-27));
    CHECK(delta.coefficient_of(Symbol::beta, 6) == MultiPoly(-27 * 16));
    CHECK(pow(a, 0) == MultiPoly(1));
}

TEST_CASE("simultaneous substitution")
{
    const Bindings level4{{Symbol::gamma, P("16*alpha^3 - 12*alpha*beta")}};
    CHECK(substitute(P("1/6*(alpha^3 + 3*alpha*beta - gamma)"), level4) == P("-5/2*alpha*(alpha^2 - beta)"));
    CHECK(substitute(P("6*alpha^2 - 6*beta"), {{Symbol::beta, P("3*alpha^2")}}) == P("-12*alpha^2"));

    const MultiPoly b1 = P("a1 + a2");
    const MultiPoly delta_t = P("16*a1^2*a2^2") * (MultiPoly(9) * b1 * b1 - P("4*a1*a2"));
    CHECK(substitute(delta_t, {{Symbol::a1, sym(Symbol::a)}, {Symbol::a2, sym(Symbol::a)}}) == P("512*a^6"));

    // swapping is simultaneous, not sequential
    CHECK(substitute(P("alpha - 2*beta"), {{Symbol::alpha, sym(Symbol::beta)}, {Symbol::beta, sym(Symbol::alpha)}}) ==
          P("beta - 2*alpha"));
}

TEST_CASE("evaluation")
{
    using Point = std::map<Symbol, BigRational>;
    CHECK(eval(P("alpha^2 + beta"), Point{{Symbol::alpha, 2}, {Symbol::beta, 1}}) == BigRational(5));
    CHECK(eval(P("64*epsilon^2*(delta^2 - epsilon)"), Point{{Symbol::delta, 1}, {Symbol::epsilon, 1}}).is_zero());
    CHECK(eval(P("4*(32*alpha^4 - 24*alpha^2*beta + 3*beta^2)"), Point{{Symbol::alpha, 1}, {Symbol::beta, 0}}) ==
          BigRational(128));
    try {
        eval(P("alpha + gamma"), Point{{Symbol::alpha, 1}});
        FAIL("expected an unbound symbol error");
    } catch (const UnboundSymbol &e) {
        CHECK(e.symbol() == Symbol::gamma);
        CHECK(std::string(e.what()).find("gamma") != std::string::npos);
    }
    const std::complex<double> z = eval(P("alpha^2 + 1"), std::map<Symbol, std::complex<double>>{{Symbol::alpha, {0, 1}}});
    CHECK(std::abs(z) < 1e-15);
}

TEST_CASE("canonical text")
{
    CHECK(to_string(MultiPoly{}) == "0");
    CHECK(to_string(P("beta + alpha^2")) == "alpha^2 + beta");
    CHECK(to_string(P("-5/2*beta*alpha")) == "-5/2*alpha*beta");
    CHECK(to_string(P("gamma - alpha*beta")) == "-alpha*beta + gamma");
    CHECK_THROWS_AS(parse_poly("alpha +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("zeta"), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials")
{
    testing::Generator gen;
    const std::vector<Symbol> symbols{Symbol::alpha, Symbol::beta, Symbol::gamma, Symbol::a1};
    for (int i = 0; i < 150; ++i) {
        const MultiPoly p = gen.poly(symbols, 4, 3);
        const MultiPoly q = gen.poly(symbols, 4, 3);
        const MultiPoly r = gen.poly(symbols, 4, 3);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("canonical text round-trips through the parser")
{
    testing::Generator gen(7);
    const std::vector<Symbol> symbols{Symbol::alpha, Symbol::lambda, Symbol::g3, Symbol::B2, Symbol::w};
    for (int i = 0; i < 150; ++i) {
        const MultiPoly p = gen.poly(symbols, 5, 4);
        CHECK(parse_poly(to_string(p)) == p);
    }
}

TEST_CASE("substitution is a ring homomorphism")
{
    testing::Generator gen(11);
    const std::vector<Symbol> symbols{Symbol::alpha, Symbol::beta, Symbol::gamma};
    for (int i = 0; i < 120; ++i) {
        const MultiPoly p = gen.poly(symbols, 3, 3);
        const MultiPoly q = gen.poly(symbols, 3, 3);
        const Bindings b{{Symbol::alpha, gen.poly(symbols, 2, 2)}, {Symbol::gamma, gen.poly({Symbol::delta}, 2, 2)}};
        CHECK(substitute(p * q, b) == substitute(p, b) * substitute(q, b));
        CHECK(substitute(p + q, b) == substitute(p, b) + substitute(q, b));
    }
}
