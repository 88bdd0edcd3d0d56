#include <iostream>

#include <CLI11.hpp>

#include "ellevel/cli.hpp"
#include "ellevel/hirzebruch.hpp"

namespace cli = ellevel::cli;

int main(int argc, char **argv)
{
    CLI::App app{"Elliptic functions of small level: expansions, formal groups and identity checks"};
    app.require_subcommand(1);

    cli::RunConfig cfg;
    std::string format = "text";
    std::string params;
    std::string level = "kr";
    std::string suite = "all";
    int players = 3;
    int cap = -1;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--order", cfg.order, "series order")->capture_default_str();
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
        sub->add_flag("--timings", cfg.timings, "include runtimes in reports");
    };

    CLI::App *expand = app.add_subcommand("expand", "series of an exponential");
    add_common(expand);
    expand->add_option("--level", level, "kr, 2, 3 or 4")->capture_default_str();
    expand->add_option("--params", params, "bindings k=v[,k=v...]");

    CLI::App *verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(cli::suite_names()));
    verify->add_option("--cap", cfg.cap, "bivariate cap")->capture_default_str();

    CLI::App *constraints = app.add_subcommand("constraints", "derive parameter constraints");
    add_common(constraints);
    constraints->add_option("--players", players, "2, 3 or 4")->capture_default_str();
    constraints->add_option("--cap", cap, "degrees beyond the lowest (default 8 for N <= 3, 7 for N = 4)");

    CLI::App *isogeny = app.add_subcommand("isogeny-table", "invariants of an index-2 sublattice");
    add_common(isogeny);
    isogeny->add_option("--params", params, "bindings for a1, a2");

    CLI::App *group = app.add_subcommand("formal-group", "formal group of an exponential");
    add_common(group);
    group->add_option("--level", level, "kr, 2, 3 or 4")->capture_default_str();
    group->add_option("--cap", cfg.cap, "bivariate cap")->capture_default_str();
    group->add_option("--params", params, "bindings k=v[,k=v...]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.format = format == "json" ? cli::Format::json : cli::Format::text;
        cli::CommandResult result;
        if (expand->parsed()) {
            cfg.params = cli::parse_params(params, cli::free_symbols(level));
            result = cli::cmd_expand(cfg, level);
        } else if (verify->parsed()) {
            result = cli::cmd_verify(cfg, suite);
        } else if (constraints->parsed()) {
            if (cap >= 0) {
                (players == 4 ? cfg.hirzebruch_cap4 : cfg.hirzebruch_cap3) = cap;
            }
            result = cli::cmd_constraints(cfg, players, cfg.hirzebruch_cap(players));
        } else if (isogeny->parsed()) {
            cfg.params = cli::parse_params(params, {ellevel::Symbol::a1, ellevel::Symbol::a2});
            result = cli::cmd_isogeny_table(cfg);
        } else {
            cfg.params = cli::parse_params(params, cli::free_symbols(level));
            result = cli::cmd_formal_group(cfg, level);
        }
        std::cout << result.output;
        return result.exit_code;
    } catch (const cli::UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
