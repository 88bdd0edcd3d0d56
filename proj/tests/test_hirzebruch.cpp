#include <doctest.h>

#include <array>
#include <vector>

#include "ellevel/hirzebruch.hpp"
#include "ellevel/krichever.hpp"
#include "support/properties.hpp"

using namespace ellevel;

namespace
{

MultiPoly P(const char *text) { return parse_poly(text); }

MultiPoly binding(const ConstraintReport &r, Symbol s)
{
    for (const auto &[sym, value] : r.bindings) {
        if (sym == s) {
            return value;
        }
    }
    FAIL("no binding for " << name(s));
    return {};
}

/// Distinct nonzero rational directions for the line restriction.
std::vector<BigRational> directions(testing::Generator &gen, std::size_t count)
{
    std::vector<BigRational> out;
    while (out.size() < count) {
        const BigRational d = gen.nonzero_rational(4);
        bool fresh = true;
        for (const auto &o : out) {
            fresh = fresh && o != d;
        }
        if (fresh) {
            out.push_back(d);
        }
    }
    return out;
}

} // namespace

TEST_CASE("cleared residuals of the level exponentials")
{
    CHECK(cleared_base_degree(2) == 1);
    CHECK(cleared_base_degree(3) == 4);
    CHECK(cleared_base_degree(4) == 9);

    // f(x2) + f(-x2) vanishes for an odd f
    CHECK(cleared_residual(level_exponential(2, 10), 2, 8).is_zero());
    CHECK(verify_level(2, 2, 8).zero());
    CHECK(verify_level(3, 3, 6).zero());
    CHECK(verify_level(2, 4, 5).zero());
    CHECK(verify_level(4, 4, 5).zero());

    const LevelReport wrong = verify_level(3, 4, 5);
    REQUIRE_FALSE(wrong.zero());
    CHECK_FALSE(wrong.first_nonzero->second.is_zero());

    const MultiSeries g = cleared_residual(level_exponential(4, 8), 4, 5);
    CHECK(g.cap() == 9 + 5);

    CHECK_THROWS_AS(cleared_residual(level_exponential(2, 10), 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(cleared_residual(level_exponential(2, 6), 3, 6), SeriesError);
}

TEST_CASE("constraints for three players")
{
    const ConstraintReport r = derive_constraints(3, 8);
    CHECK(r.consistent());
    REQUIRE(r.bindings.size() == 2);
    CHECK(binding(r, Symbol::beta) == P("3*alpha^2"));
    CHECK(binding(r, Symbol::lambda) == P("12*alpha*(9*alpha^3 + gamma)"));
    CHECK(r.redundant_checks > 0);
    CHECK(r.reparametrization.empty());
}

TEST_CASE("constraints for four players")
{
    const ConstraintReport r = derive_constraints(4, 7);
    CHECK(r.consistent());
    REQUIRE(r.bindings.size() == 2);
    CHECK(binding(r, Symbol::gamma) == P("4*alpha*(4*alpha^2 - 3*beta)"));
    CHECK(binding(r, Symbol::lambda) == P("4*(32*alpha^4 - 24*alpha^2*beta + 3*beta^2)"));
    CHECK(r.redundant_checks > 0);
}

TEST_CASE("constraints for two players")
{
    const ConstraintReport r = derive_constraints(2, 8);
    CHECK(r.consistent());
    CHECK(binding(r, Symbol::alpha).is_zero());
    CHECK(binding(r, Symbol::gamma).is_zero());
    REQUIRE(r.reparametrization.size() == 2);
    CHECK(r.reparametrization[0].second == P("-2/3*delta"));
    CHECK(r.reparametrization[1].second == P("16/3*delta^2 - 4*epsilon"));
}

TEST_CASE("constraint derivation is deterministic and needs a large enough cap")
{
    const ConstraintReport a = derive_constraints(3, 6);
    const ConstraintReport b = derive_constraints(3, 6);
    CHECK(a.bindings == b.bindings);
    CHECK(a.redundant_checks == b.redundant_checks);
    for (std::size_t i = 1; i < a.bindings.size(); ++i) {
        CHECK(a.bindings[i - 1].first < a.bindings[i].first);
    }
    CHECK_THROWS_AS(derive_constraints(3, 0), NonlinearConstraint);
    CHECK_THROWS_AS(derive_constraints(4, 0), NonlinearConstraint);
}

TEST_CASE("the cleared residual is symmetric in the players")
{
    testing::Generator gen;
    const int cap = 4;
    for (int trial = 0; trial < 5; ++trial) {
        const LaurentSeries f = gen.exponential(cap + 1);
        const MultiSeries g = cleared_residual(f, 4, cap);
        REQUIRE_FALSE(g.is_zero());

        // permuting x2, x3, x4
        const std::vector<std::size_t> perm = gen.permutation(3);
        CHECK((g.permuted(perm) - g).is_zero());

        // swapping x1 and x2, then translating x2 back to the origin
        const MultiSeries x2 = MultiSeries::variable(0, 3);
        const std::array<MultiSeries, 3> relabel{-x2, MultiSeries::variable(1, 3) - x2, MultiSeries::variable(2, 3) - x2};
        CHECK((substitute_vars(g, relabel, g.cap()) - g).is_zero());
    }
}

TEST_CASE("clearing agrees with a direct computation on lines")
{
    testing::Generator gen(5);
    for (int players : {2, 3, 4}) {
        const int cap = players == 4 ? 4 : 6;
        for (int trial = 0; trial < 4; ++trial) {
            const LaurentSeries f = gen.exponential(cap + 1);
            const std::vector<BigRational> dirs = directions(gen, static_cast<std::size_t>(players - 1));
            const LaurentSeries restricted = restrict_to_line(cleared_residual(f, players, cap), dirs);
            const LaurentSeries direct = cleared_residual_on_line(f, dirs, cap);
            CHECK(vanishes_through(restricted - direct, cleared_base_degree(players) + cap));
        }
    }
    const std::array<BigRational, 2> clash{BigRational(1), BigRational(1)};
    CHECK_THROWS_AS(cleared_residual_on_line(level_exponential(3, 8), clash, 4), std::invalid_argument);
}
