#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellevel/laurent.hpp"
#include "ellevel/multiseries.hpp"
#include "ellevel/poly.hpp"

namespace ellevel::cli
{

enum class Format { text, json };

/// Every default of the command-line tool, echoed into each report.
struct RunConfig {
    int order = 12;
    int cap = 8;
    int hirzebruch_cap3 = 8;
    int hirzebruch_cap4 = 7;
    Format format = Format::text;
    std::uint64_t seed = 20240607;
    bool timings = false;
    Bindings params;

    int hirzebruch_cap(int players) const { return players == 4 ? hirzebruch_cap4 : hirzebruch_cap3; }
};

/// Bad command-line input; the front end maps it to exit status 2.
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws UsageError unless order >= min_order and every cap >= 4.
void validate(const RunConfig &cfg, int min_order = 6);

/// "alpha=1/2,beta=0" -> bindings. Values are polynomial expressions.
/// Symbols outside `allowed` raise UsageError.
Bindings parse_params(const std::string &text, const std::vector<Symbol> &allowed);

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

/// level: "kr", "2", "3" or "4".
std::vector<Symbol> free_symbols(const std::string &level);
LaurentSeries exponential_for(const std::string &level, int order, const Bindings &params);

CommandResult cmd_expand(const RunConfig &cfg, const std::string &level);
CommandResult cmd_verify(const RunConfig &cfg, const std::string &suite);
CommandResult cmd_constraints(const RunConfig &cfg, int players, int cap);
CommandResult cmd_isogeny_table(const RunConfig &cfg);
CommandResult cmd_formal_group(const RunConfig &cfg, const std::string &level);

struct CheckResult {
    std::string id;
    std::string anchor;
    bool passed = false;
    std::string detail;
    /// Canonical text of the offending residual for exact identity checks ("0" on success).
    std::optional<std::string> residual;
    double seconds = 0.0;
};

const std::vector<std::string> &suite_names();

/// Runs one suite ("all" runs every suite). Results are sorted by id.
std::vector<CheckResult> run_suite(const std::string &suite, const RunConfig &cfg);

/// Text rendering of a series, e.g. "x + alpha*x^2 + (1/2*alpha^2 + 1/2*beta)*x^3".
std::string series_text(const LaurentSeries &s, const std::string &var = "x");

/// Largest relative error of f(x + y) against F(f(x), f(y)) over `count` random points
/// with |x|, |y| <= radius, drawn from a generator seeded with `seed`. Coefficients must be rational.
double addition_law_error(const LaurentSeries &f, const BivariateSeries &F, std::uint64_t seed, int count,
                          double radius);

} // namespace ellevel::cli
