#include <doctest.h>

#include <string>

#include "ellevel/isogeny.hpp"
#include "ellevel/weierstrass.hpp"
#include "support/properties.hpp"

using namespace ellevel;

namespace
{

MultiPoly P(const char *text) { return parse_poly(text); }
MultiPoly sym(Symbol s) { return MultiPoly::symbol(s); }

MultiPoly relation(const ExampleRelations &ex, const std::string &name)
{
    for (const auto &[n, v] : ex.relations) {
        if (n == name) {
            return v;
        }
    }
    FAIL("missing relation " << name);
    return {};
}

} // namespace

TEST_CASE("index-2 invariants")
{
    const IsogenyRecord r = index2_invariants(sym(Symbol::a1), sym(Symbol::a2));
    CHECK(r.b1 == P("a1 + a2"));
    CHECK(r.g2 == P("4*(a1 + 3*a2)*(3*a1 + a2)"));
    CHECK(r.g3 == P("-8*(a1 + a2)*(a1 - a2)^2"));
    CHECK(r.g2_tilde == r.g2 - P("20*a1*a2"));
    CHECK(r.g3_tilde == r.g3 - P("28*a1*a2*(a1 + a2)"));
    CHECK(r.fields().size() == 9);
    CHECK(r.fields().front().first == "a1");

    for (const IdentityCheck &c : discriminant_checks(r)) {
        INFO(c.name);
        CHECK(c.holds());
        CHECK(c.difference().is_zero());
    }
    CHECK(r.delta == discriminant(r.g2, r.g3));
    CHECK(r.delta_tilde == discriminant(r.g2_tilde, r.g3_tilde));

    const IsogenyRecord equal = index2_invariants(sym(Symbol::a), sym(Symbol::a));
    CHECK(equal.g3.is_zero());
    CHECK(equal.delta == P("256*a^2") * pow(P("32*a^2"), 2));

    const IsogenyRecord degenerate = index2_invariants(MultiPoly{}, sym(Symbol::a2));
    CHECK(degenerate.delta.is_zero());
    CHECK(degenerate.delta_tilde.is_zero());
}

TEST_CASE("discriminants hold on random specializations")
{
    testing::Generator gen;
    for (int i = 0; i < 100; ++i) {
        const IsogenyRecord r = index2_invariants(MultiPoly(gen.rational()), MultiPoly(gen.rational()));
        CHECK(r.delta == discriminant(r.g2, r.g3));
        CHECK(r.delta_tilde == discriminant(r.g2_tilde, r.g3_tilde));
    }
}

TEST_CASE("level-4 sublattice")
{
    const auto [g2t, g3t] = level4_sublattice(sym(Symbol::alpha), sym(Symbol::beta));
    CHECK(MultiPoly(-4) * g2t == P("13*alpha^4 - 6*alpha^2*beta - 3*beta^2"));
    CHECK(MultiPoly(8) * g3t == P("(alpha^2 - beta)*(17*alpha^4 - 14*alpha^2*beta + beta^2)"));
    // g3~ carries the factor alpha^2 - beta, so it vanishes at alpha = beta = 1
    const auto [g2t_one, g3t_one] = level4_sublattice(MultiPoly(1), MultiPoly(1));
    CHECK(g2t_one == MultiPoly(-1));
    CHECK(g3t_one.is_zero());
    CHECK(level4_sublattice(sym(Symbol::alpha), P("alpha^2")).second.is_zero());
    CHECK_FALSE(level4_sublattice(sym(Symbol::alpha), sym(Symbol::alpha)).second.is_zero());

    const auto [g2, g3] = level4_base_invariants(sym(Symbol::alpha), sym(Symbol::beta));
    CHECK(discriminant(g2, g3) == P("256*alpha^2*(5*alpha^2 - 3*beta)*(4*alpha^2 - 3*beta)^4"));

    const Bindings sub = level4_to_example3();
    CHECK(MultiPoly(4) * sub.at(Symbol::a) == P("-3*alpha^2 + beta"));
    CHECK(MultiPoly(2) * sub.at(Symbol::b) == P("alpha^2 - beta"));
}

TEST_CASE("isogeny keystone")
{
    const std::vector<IdentityCheck> checks = level4_keystone_checks();
    REQUIRE(checks.size() == 4);
    for (const IdentityCheck &c : checks) {
        INFO(c.name << ": " << to_string(c.difference()));
        CHECK(c.holds());
    }

    // an independent route: substitute into the third example's formulas by hand
    const Bindings sub{{Symbol::a, P("1/4*(-3*alpha^2 + beta)")}, {Symbol::b, P("1/2*(alpha^2 - beta)")}};
    const auto [g2t, g3t] = level4_sublattice(sym(Symbol::alpha), sym(Symbol::beta));
    CHECK(substitute(P("-4*(a^2 - 2*a*b - 2*b^2)"), sub) == g2t);
    CHECK(substitute(P("4*b*(a^2 - 2*a*b - b^2)"), sub) == g3t);
    CHECK(substitute(P("4*(44*a^2 - 28*a*b - 13*b^2)"), sub) == P("4*(32*alpha^4 - 24*alpha^2*beta + 3*beta^2)"));
}

TEST_CASE("level-2 examples")
{
    for (int example : {1, 2, 3}) {
        const ExampleRelations ex = level2_example_relations(example);
        CHECK(ex.example == example);
        CHECK_FALSE(ex.checks.empty());
        for (const IdentityCheck &c : ex.checks) {
            INFO("example " << example << ", " << c.name);
            CHECK(c.holds());
        }
    }

    const ExampleRelations ex2 = level2_example_relations(2);
    const Bindings equal{{Symbol::b, sym(Symbol::a)}};
    CHECK(substitute(relation(ex2, "g2_tilde"), equal) == P("12*a^2"));
    CHECK(substitute(relation(ex2, "g3_tilde"), equal) == P("-8*a^3"));

    const ExampleRelations ex3 = level2_example_relations(3);
    CHECK(discriminant(relation(ex3, "g2_tilde"), relation(ex3, "g3_tilde")) ==
          P("-16*(2*a + b)*(2*a - 5*b)*(a - b)^4"));
    CHECK(discriminant(relation(ex3, "g2"), relation(ex3, "g3")) == P("1024*(2*a + b)*(a - b)*(2*a - 5*b)^4"));

    CHECK(relation(level2_example_relations(1), "c") == P("-a - b"));
    CHECK_THROWS_AS(level2_example_relations(4), std::invalid_argument);
}
