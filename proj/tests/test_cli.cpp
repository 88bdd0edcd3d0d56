#include <doctest.h>

#include <string>

#include "ellevel/cli.hpp"
#include "ellevel/formalgroup.hpp"
#include "ellevel/krichever.hpp"

using namespace ellevel;
using namespace ellevel::cli;

namespace
{

bool contains(const std::string &haystack, const std::string &needle) { return haystack.find(needle) != std::string::npos; }

RunConfig json_config()
{
    RunConfig cfg;
    cfg.format = Format::json;
    return cfg;
}

} // namespace

TEST_CASE("configuration and parameters")
{
    RunConfig cfg;
    CHECK(cfg.order == 12);
    CHECK(cfg.cap == 8);
    CHECK(cfg.hirzebruch_cap(3) == 8);
    CHECK(cfg.hirzebruch_cap(4) == 7);
    CHECK_NOTHROW(validate(cfg));
    cfg.order = 5;
    CHECK_THROWS_AS(validate(cfg), UsageError);
    CHECK_NOTHROW(validate(cfg, 5));
    cfg = RunConfig{};
    cfg.cap = 3;
    CHECK_THROWS_AS(validate(cfg), UsageError);

    const Bindings b = parse_params("alpha=1/2, beta=gamma^2", free_symbols("kr"));
    CHECK(b.at(Symbol::alpha) == MultiPoly(BigRational(1, 2)));
    CHECK(b.at(Symbol::beta) == parse_poly("gamma^2"));
    CHECK(parse_params("", free_symbols("kr")).empty());
    CHECK_THROWS_AS(parse_params("beta=1", free_symbols("3")), UsageError);
    CHECK_THROWS_AS(parse_params("zeta=1", free_symbols("kr")), UsageError);
    CHECK_THROWS_AS(parse_params("alpha", free_symbols("kr")), UsageError);
    CHECK_THROWS_AS(parse_params("alpha=1/0", free_symbols("kr")), UsageError);
    CHECK_THROWS_AS(free_symbols("5"), UsageError);
}

TEST_CASE("expand")
{
    RunConfig cfg;
    cfg.order = 5;
    const CommandResult level4 = cmd_expand(cfg, "4");
    CHECK(level4.exit_code == 0);
    CHECK(contains(level4.output, "(-5/2*alpha^3 + 5/2*alpha*beta)*x^4"));
    CHECK(contains(level4.output, "(-233/40*alpha^4 + 93/20*alpha^2*beta + 3/40*beta^2)*x^5"));

    const CommandResult level3 = cmd_expand(cfg, "3");
    CHECK(contains(level3.output, "2*alpha^2*x^3"));
    CHECK(contains(level3.output, "(5/3*alpha^3 - 1/6*gamma)*x^4"));
    CHECK(contains(level3.output, "(22/15*alpha^4 - 7/15*alpha*gamma)*x^5"));

    RunConfig trivial;
    trivial.params = parse_params("alpha=0,beta=0,gamma=0,lambda=0", free_symbols("kr"));
    CHECK(cmd_expand(trivial, "kr").output == "x\n");

    CHECK(series_text(level_exponential(4, 8).truncated(3)) == "x + alpha*x^2 + (1/2*alpha^2 + 1/2*beta)*x^3");
    CHECK(series_text(LaurentSeries::variable(), "u") == "u");
    RunConfig too_short;
    too_short.order = 4;
    CHECK_THROWS_AS(cmd_expand(too_short, "4"), UsageError);
}

TEST_CASE("json reports are versioned and deterministic")
{
    RunConfig cfg = json_config();
    cfg.order = 6;
    const std::string first = cmd_expand(cfg, "3").output;
    CHECK(first == cmd_expand(cfg, "3").output);
    CHECK(contains(first, "\"schema\": \"1\""));
    CHECK(contains(first, "\"seed\": 20240607"));
    CHECK_FALSE(contains(first, "runtime"));

    const std::string verify = cmd_verify(cfg, "isogeny").output;
    CHECK(verify == cmd_verify(cfg, "isogeny").output);
    CHECK(contains(verify, "\"status\": \"pass\""));
    CHECK_FALSE(contains(verify, "runtime_s"));

    cfg.timings = true;
    CHECK(contains(cmd_verify(cfg, "isogeny").output, "runtime_s"));

    const std::string fg = cmd_formal_group(json_config(), "4").output;
    CHECK(contains(fg, "\"vars\": ["));
    CHECK(contains(fg, "\"du\": 1"));
}

TEST_CASE("verify suites")
{
    RunConfig cfg;
    cfg.order = 8;
    for (const std::string &suite : suite_names()) {
        if (suite == "all") {
            continue;
        }
        const std::vector<CheckResult> results = run_suite(suite, cfg);
        REQUIRE_FALSE(results.empty());
        for (std::size_t i = 0; i < results.size(); ++i) {
            INFO(suite << "/" << results[i].id << ": " << results[i].detail);
            CHECK(results[i].passed);
            CHECK_FALSE(results[i].anchor.empty());
            if (i > 0) {
                CHECK(results[i - 1].id < results[i].id);
            }
        }
    }
    const CommandResult r = cmd_verify(cfg, "closedforms");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "0 failed"));
    CHECK_THROWS_AS(cmd_verify(cfg, "nothing"), UsageError);
}

TEST_CASE("constraints")
{
    const RunConfig cfg;
    const CommandResult three = cmd_constraints(cfg, 3, 8);
    CHECK(three.exit_code == 0);
    CHECK(contains(three.output, "beta = 3*alpha^2; lambda = 108*alpha^4 + 12*alpha*gamma"));
    const CommandResult four = cmd_constraints(cfg, 4, 7);
    CHECK(contains(four.output, "gamma = 16*alpha^3 - 12*alpha*beta"));
    CHECK(contains(four.output, "lambda = 128*alpha^4 - 96*alpha^2*beta + 12*beta^2"));
    const CommandResult two = cmd_constraints(cfg, 2, 8);
    CHECK(contains(two.output, "alpha = 0; gamma = 0"));
    CHECK_THROWS_AS(cmd_constraints(cfg, 5, 8), UsageError);
}

TEST_CASE("isogeny table and the numeric addition law")
{
    const CommandResult table = cmd_isogeny_table(RunConfig{});
    CHECK(table.exit_code == 0);
    CHECK(contains(table.output, "b1 = a1 + a2"));
    RunConfig bad;
    bad.params = {{Symbol::alpha, MultiPoly(1)}};
    CHECK_THROWS_AS(cmd_isogeny_table(bad), UsageError);

    const LaurentSeries f = substitute(level_exponential(2, 12), {{Symbol::delta, 1}, {Symbol::epsilon, BigRational(1, 4)}});
    const double err = addition_law_error(f, fg_from_exp(f, 12), 20240607, 20, 0.05);
    CHECK(err <= 1e-8);
}
