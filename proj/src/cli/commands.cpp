#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "ellevel/cli.hpp"
#include "ellevel/formalgroup.hpp"
#include "ellevel/hirzebruch.hpp"
#include "ellevel/isogeny.hpp"
#include "ellevel/krichever.hpp"

namespace ellevel::cli
{

using nlohmann::ordered_json;

namespace
{

bool is_single_term(const MultiPoly &p) { return p.size() == 1; }

std::string format_name(Format f) { return f == Format::json ? "json" : "text"; }

ordered_json config_json(const RunConfig &cfg)
{
    ordered_json params = ordered_json::object();
    for (const auto &[s, v] : cfg.params) {
        params[std::string(name(s))] = to_string(v);
    }
    return {{"order", cfg.order},
            {"cap", cfg.cap},
            {"hirzebruch_caps", {{"3", cfg.hirzebruch_cap3}, {"4", cfg.hirzebruch_cap4}}},
            {"format", format_name(cfg.format)},
            {"seed", cfg.seed},
            {"timings", cfg.timings},
            {"params", params}};
}

ordered_json envelope(const RunConfig &cfg, const std::string &command)
{
    return {{"schema", "1"}, {"command", command}, {"config", config_json(cfg)}};
}

std::string dump(const ordered_json &j) { return j.dump(2) + "\n"; }

ordered_json series_json(const LaurentSeries &s, const std::string &var = "x")
{
    ordered_json coeffs = ordered_json::array();
    for (int d = s.valuation(); d <= s.high_degree(); ++d) {
        const MultiPoly c = s.coeff(d);
        if (!c.is_zero()) {
            coeffs.push_back({{"deg", d}, {"poly", to_string(c)}});
        }
    }
    return {{"var", var}, {"pole_order", s.pole_order()}, {"trunc", s.trunc()}, {"coeffs", coeffs}};
}

ordered_json bivariate_json(const BivariateSeries &F)
{
    ordered_json coeffs = ordered_json::array();
    for (const auto &[e, c] : F.terms()) {
        coeffs.push_back({{"du", e[0]}, {"dv", e[1]}, {"poly", to_string(c)}});
    }
    return {{"vars", {"u", "v"}}, {"cap", F.cap()}, {"coeffs", coeffs}};
}

std::string power_text(const char *var, unsigned e)
{
    if (e == 0) {
        return "";
    }
    return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
}

/// Joins "coefficient * monomial" terms, folding signs into the separators.
class TermJoiner
{
public:
    void add(const MultiPoly &c, const std::string &monomial)
    {
        std::string coeff = to_string(c);
        std::string term;
        if (monomial.empty()) {
            term = is_single_term(c) ? coeff : "(" + coeff + ")";
        } else if (coeff == "1") {
            term = monomial;
        } else if (coeff == "-1") {
            term = "-" + monomial;
        } else {
            term = (is_single_term(c) ? coeff : "(" + coeff + ")") + "*" + monomial;
        }
        if (m_text.empty()) {
            m_text = term;
        } else if (term.front() == '-') {
            m_text += " - " + term.substr(1);
        } else {
            m_text += " + " + term;
        }
    }

    std::string str() const { return m_text.empty() ? "0" : m_text; }

private:
    std::string m_text;
};

std::string bivariate_text(const BivariateSeries &F)
{
    TermJoiner out;
    for (const auto &[e, c] : F.terms()) {
        const std::string u = power_text("u", e[0]);
        const std::string v = power_text("v", e[1]);
        out.add(c, u.empty() || v.empty() ? u + v : u + "*" + v);
    }
    return out.str();
}

void check_params(const Bindings &params, const std::vector<Symbol> &allowed, const std::string &context)
{
    for (const auto &[s, v] : params) {
        if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) {
            throw UsageError("parameter '" + std::string(name(s)) + "' is not free for " + context);
        }
    }
}

std::string bindings_text(const std::vector<std::pair<Symbol, MultiPoly>> &b)
{
    std::string out;
    for (const auto &[s, v] : b) {
        out += (out.empty() ? "" : "; ") + std::string(name(s)) + " = " + to_string(v);
    }
    return out;
}

ordered_json bindings_json(const std::vector<std::pair<Symbol, MultiPoly>> &b)
{
    ordered_json out = ordered_json::array();
    for (const auto &[s, v] : b) {
        out.push_back({{"symbol", std::string(name(s))}, {"value", to_string(v)}});
    }
    return out;
}

ordered_json monomial_json(const SeriesExponent &e, int nvars)
{
    ordered_json out = ordered_json::array();
    for (int i = 0; i < nvars; ++i) {
        out.push_back(e[static_cast<std::size_t>(i)]);
    }
    return out;
}

} // namespace

void validate(const RunConfig &cfg, int min_order)
{
    if (cfg.order < min_order) {
        throw UsageError("--order must be at least " + std::to_string(min_order));
    }
    if (cfg.cap < 4 || cfg.hirzebruch_cap3 < 4 || cfg.hirzebruch_cap4 < 4) {
        throw UsageError("caps must be at least 4");
    }
}

Bindings parse_params(const std::string &text, const std::vector<Symbol> &allowed)
{
    Bindings out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(' ') == std::string::npos) {
            continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw UsageError("parameter '" + item + "' is not of the form name=value");
        }
        std::string key = item.substr(0, eq);
        key.erase(0, key.find_first_not_of(' '));
        key.erase(key.find_last_not_of(' ') + 1);
        const auto s = symbol_from_name(key);
        if (!s || std::find(allowed.begin(), allowed.end(), *s) == allowed.end()) {
            throw UsageError("unknown parameter '" + key + "'");
        }
        try {
            out[*s] = parse_poly(item.substr(eq + 1));
        } catch (const std::invalid_argument &e) {
            throw UsageError("bad value for '" + key + "': " + e.what());
        }
    }
    return out;
}

std::vector<Symbol> free_symbols(const std::string &level)
{
    if (level == "kr") {
        return {Symbol::alpha, Symbol::beta, Symbol::gamma, Symbol::lambda};
    }
    if (level == "2") {
        return {Symbol::delta, Symbol::epsilon};
    }
    if (level == "3") {
        return {Symbol::alpha, Symbol::gamma};
    }
    if (level == "4") {
        return {Symbol::alpha, Symbol::beta};
    }
    throw UsageError("unknown level '" + level + "' (expected kr, 2, 3 or 4)");
}

LaurentSeries exponential_for(const std::string &level, int order, const Bindings &params)
{
    check_params(params, free_symbols(level), "level " + level);
    if (level == "kr") {
        return fkr_from_ode(KrParams::symbolic().substituted(params), order);
    }
    return substitute(level_exponential(std::stoi(level), order), params);
}

std::string series_text(const LaurentSeries &s, const std::string &var)
{
    TermJoiner out;
    for (int d = s.valuation(); d <= s.high_degree(); ++d) {
        const MultiPoly c = s.coeff(d);
        if (!c.is_zero()) {
            out.add(c, d == 0 ? "" : d == 1 ? var : var + "^" + std::to_string(d));
        }
    }
    return out.str();
}

CommandResult cmd_expand(const RunConfig &cfg, const std::string &level)
{
    validate(cfg, 5);
    const LaurentSeries f = exponential_for(level, cfg.order, cfg.params);
    if (cfg.format == Format::text) {
        return {0, series_text(f) + "\n"};
    }
    ordered_json j = envelope(cfg, "expand");
    j["level"] = level;
    j["series"] = series_json(f);
    return {0, dump(j)};
}

CommandResult cmd_verify(const RunConfig &cfg, const std::string &suite)
{
    validate(cfg);
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        throw UsageError("unknown suite '" + suite + "'");
    }
    const std::vector<CheckResult> results = run_suite(suite, cfg);
    const auto failed = std::count_if(results.begin(), results.end(), [](const auto &r) { return !r.passed; });
    const int code = failed == 0 ? 0 : 1;
    if (cfg.format == Format::json) {
        ordered_json j = envelope(cfg, "verify");
        j["suite"] = suite;
        ordered_json checks = ordered_json::array();
        for (const auto &r : results) {
            ordered_json c{{"id", r.id}, {"anchor", r.anchor}, {"status", r.passed ? "pass" : "fail"},
                           {"detail", r.detail}};
            if (r.residual) {
                c["residual"] = *r.residual;
            }
            if (cfg.timings) {
                c["runtime_s"] = r.seconds;
            }
            checks.push_back(c);
        }
        j["checks"] = checks;
        j["passed"] = static_cast<long>(results.size()) - failed;
        j["failed"] = failed;
        return {code, dump(j)};
    }
    std::ostringstream out;
    for (const auto &r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.detail;
        if (cfg.timings) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " [%.3f s]", r.seconds);
            out << buf;
        }
        out << "\n";
    }
    out << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
    const auto first = std::find_if(results.begin(), results.end(), [](const auto &r) { return !r.passed; });
    if (first != results.end()) {
        out << "first failure: " << first->id << ": " << first->detail << "\n";
    }
    return {code, out.str()};
}

CommandResult cmd_constraints(const RunConfig &cfg, int players, int cap)
{
    validate(cfg);
    if (players < 2 || players > 4) {
        throw UsageError("--players must be 2, 3 or 4");
    }
    if (cap < 4) {
        throw UsageError("caps must be at least 4");
    }
    const ConstraintReport r = derive_constraints(players, cap);
    const int code = r.consistent() ? 0 : 1;
    if (cfg.format == Format::json) {
        ordered_json j = envelope(cfg, "constraints");
        j["players"] = players;
        j["cap"] = cap;
        j["status"] = r.consistent() ? "zero" : "nonzero";
        j["constraints"] = bindings_json(r.bindings);
        if (!r.reparametrization.empty()) {
            j["reparametrization"] = bindings_json(r.reparametrization);
        }
        j["redundant_checks"] = r.redundant_checks;
        if (r.first_nonzero) {
            j["first_nonzero"] = {{"monomial", monomial_json(r.first_nonzero->first, players - 1)},
                                  {"poly", to_string(r.first_nonzero->second)}};
        }
        return {code, dump(j)};
    }
    std::ostringstream out;
    out << bindings_text(r.bindings) << "\n";
    if (!r.reparametrization.empty()) {
        out << "reparametrization: " << bindings_text(r.reparametrization) << "\n";
    }
    out << "redundant vanishing checks: " << r.redundant_checks << "\n";
    if (r.first_nonzero) {
        out << "residual survives: " << to_string(r.first_nonzero->second) << "\n";
    }
    return {code, out.str()};
}

CommandResult cmd_isogeny_table(const RunConfig &cfg)
{
    validate(cfg);
    check_params(cfg.params, {Symbol::a1, Symbol::a2}, "isogeny-table");
    auto value = [&](Symbol s) {
        const auto it = cfg.params.find(s);
        return it == cfg.params.end() ? MultiPoly::symbol(s) : it->second;
    };
    const IsogenyRecord rec = index2_invariants(value(Symbol::a1), value(Symbol::a2));
    const std::vector<IdentityCheck> checks = discriminant_checks(rec);
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.holds(); });
    if (cfg.format == Format::json) {
        ordered_json j = envelope(cfg, "isogeny-table");
        ordered_json record = ordered_json::object();
        for (const auto &[k, v] : rec.fields()) {
            record[k] = to_string(v);
        }
        j["record"] = record;
        ordered_json cj = ordered_json::array();
        for (const auto &c : checks) {
            cj.push_back({{"identity", c.name}, {"status", c.holds() ? "pass" : "fail"}});
        }
        j["checks"] = cj;
        return {ok ? 0 : 1, dump(j)};
    }
    std::ostringstream out;
    for (const auto &[k, v] : rec.fields()) {
        out << k << " = " << to_string(v) << "\n";
    }
    for (const auto &c : checks) {
        out << (c.holds() ? "PASS " : "FAIL ") << c.name << "\n";
    }
    return {ok ? 0 : 1, out.str()};
}

CommandResult cmd_formal_group(const RunConfig &cfg, const std::string &level)
{
    validate(cfg);
    const LaurentSeries f = exponential_for(level, std::max(cfg.order, cfg.cap + 1), cfg.params);
    const BivariateSeries F = fg_from_exp(f, cfg.cap);
    const ABPair ab = extract_AB(f);
    if (cfg.format == Format::json) {
        ordered_json j = envelope(cfg, "formal-group");
        j["level"] = level;
        j["group"] = bivariate_json(F);
        j["A"] = series_json(ab.A, "u");
        j["B"] = series_json(ab.B, "u");
        j["A1"] = to_string(ab.A1);
        j["B2"] = to_string(ab.B2);
        return {0, dump(j)};
    }
    std::ostringstream out;
    out << "F(u, v) = " << bivariate_text(F) << "\n";
    out << "A(u) = " << series_text(ab.A, "u") << "\n";
    out << "B(u) = " << series_text(ab.B, "u") << "\n";
    out << "A1 = " << to_string(ab.A1) << "\n";
    out << "B2 = " << to_string(ab.B2) << "\n";
    return {0, out.str()};
}

} // namespace ellevel::cli
