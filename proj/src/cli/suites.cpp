#include <algorithm>
#include <array>
#include <chrono>
#include <complex>
#include <random>

#include "ellevel/cli.hpp"
#include "ellevel/formalgroup.hpp"
#include "ellevel/hirzebruch.hpp"
#include "ellevel/isogeny.hpp"
#include "ellevel/krichever.hpp"
#include "ellevel/weierstrass.hpp"
#include "ellevel/wring.hpp"

namespace ellevel::cli
{

namespace
{

struct Outcome {
    bool passed;
    std::string detail;
    std::optional<std::string> residual = std::nullopt;
};

struct Check {
    std::string id;
    std::string anchor;
    std::function<Outcome()> run;
};

MultiPoly sym(Symbol s) { return MultiPoly::symbol(s); }

MultiPoly P_(const char *text) { return parse_poly(text); }

Outcome zero_series(const LaurentSeries &r, const std::string &what)
{
    if (r.is_zero()) {
        return {true, what + " vanishes through x^" + std::to_string(r.trunc())};
    }
    const int v = r.valuation();
    return {false, what + " nonzero at x^" + std::to_string(v) + ": " + to_string(r.coeff(v))};
}

Outcome all_of(const std::vector<Outcome> &parts)
{
    Outcome out{true, ""};
    for (const auto &p : parts) {
        out.passed = out.passed && p.passed;
        out.detail += (out.detail.empty() ? "" : "; ") + p.detail;
    }
    return out;
}

Outcome identities(const std::vector<IdentityCheck> &checks)
{
    std::vector<Outcome> parts;
    for (const auto &c : checks) {
        parts.push_back({c.holds(), c.name + (c.holds() ? "" : " fails by " + to_string(c.difference()))});
    }
    return all_of(parts);
}

bool mentions(const LaurentSeries &s, Symbol sym_)
{
    for (int d = s.valuation(); d <= s.high_degree(); ++d) {
        if (s.coeff(d).contains(sym_)) {
            return true;
        }
    }
    return false;
}

std::string exponent_text(const SeriesExponent &e, std::size_t n)
{
    std::string out = "(";
    for (std::size_t i = 0; i < n; ++i) {
        out += (i ? "," : "") + std::to_string(e[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------- weierstrass

std::vector<Check> weierstrass_checks(const RunConfig &cfg)
{
    const int n = cfg.order;
    auto ctx = std::make_shared<WeierstrassContext>(WeierstrassContext::symbolic(n + 2));
    auto ba = std::make_shared<BakerAkhiezerContext>(phi_series(*ctx, n));
    return {
        {"weierstrass.wp-coefficients", "wp = x^-2 + g2/20 x^2 + g3/28 x^4 + ...; cusp case wp = x^-2",
         [=] {
             const bool first = ctx->wp.coeff(2) == sym(Symbol::g2) * BigRational(1, 20) &&
                                ctx->wp.coeff(4) == sym(Symbol::g3) * BigRational(1, 28);
             const LaurentSeries cusp = wp_series(MultiPoly{}, MultiPoly{}, n);
             const bool degenerate = (cusp - LaurentSeries::monomial(MultiPoly(1), -2)).is_zero();
             return Outcome{first && degenerate, "c2 = g2/20, c3 = g3/28, g2 = g3 = 0 gives x^-2"};
         }},
        {"weierstrass.parity", "wp even, zeta and sigma odd", [=] {
             bool ok = true;
             for (int d = -2; d <= ctx->wp.trunc(); ++d) {
                 ok = ok && (d % 2 == 0 || ctx->wp.coeff(d).is_zero());
             }
             for (const LaurentSeries *s : {&ctx->zeta, &ctx->sigma}) {
                 for (int d = -1; d <= s->trunc(); ++d) {
                     ok = ok && (d % 2 != 0 || s->coeff(d).is_zero());
                 }
             }
             return Outcome{ok, ok ? "parity holds" : "parity violated"};
         }},
        {"weierstrass.cubic-relation", "wp'^2 = 4 wp^3 - g2 wp - g3", [=] {
             const LaurentSeries &wp = ctx->wp;
             const LaurentSeries r = ctx->wp_prime * ctx->wp_prime - wp * wp * wp * MultiPoly(4) +
                                     wp * sym(Symbol::g2) + LaurentSeries::constant(sym(Symbol::g3));
             return zero_series(r, "cubic relation residual");
         }},
        {"weierstrass.zeta-sigma", "zeta' = -wp and (ln sigma)' = zeta", [=] {
             return all_of({zero_series(derivative(ctx->zeta) + ctx->wp, "zeta' + wp"),
                            zero_series(derivative(ctx->sigma) - ctx->zeta * ctx->sigma, "sigma' - zeta sigma")});
         }},
        {"weierstrass.lame", "Phi'' = (2 wp(x) + wp(z)) Phi",
         [=] { return zero_series(lame_residual(*ba), "Lame residual"); }},
        {"weierstrass.log-derivative", "2 (wp(x) - wp(z)) Phi' = (wp'(x) + wp'(z)) Phi",
         [=] { return zero_series(log_derivative_residual(*ba), "log-derivative residual"); }},
        {"weierstrass.phi-equation", "Phi Phi''' - 3 Phi' Phi'' + 6 wp(z) Phi Phi' + 2 wp'(z) Phi^2 = 0", [=] {
             const Bindings spot{{Symbol::beta, MultiPoly(1)},
                                 {Symbol::gamma, MultiPoly(2)},
                                 {Symbol::g2, MultiPoly{}},
                                 {Symbol::g3, MultiPoly{}},
                                 {Symbol::w, MultiPoly(BigRational(1, 3))}};
             return all_of({zero_series(verify_phieq(*ba), "reduced residual"),
                            zero_series(substitute(phieq_unreduced(*ba), spot), "residual at a point of the curve")});
         }},
        {"weierstrass.fkr-agreement", "exp(alpha x) / Phi equals the ODE solution, free of zeta(z)", [=] {
             const LaurentSeries a = fkr_from_phi(*ba, sym(Symbol::alpha));
             const LaurentSeries b = fkr_from_ode(KrParams::symbolic(), n);
             if (mentions(a, Symbol::w)) {
                 return Outcome{false, "coefficients still involve w"};
             }
             return zero_series(a - b, "difference of the two constructions");
         }},
        {"weierstrass.discriminants", "g2^3 - 27 g3^2 for the level 2, 3, 4 invariants", [] {
             std::vector<Outcome> parts;
             for (int level = 2; level <= 4; ++level) {
                 const auto [g2, g3] = level_invariants(level);
                 const bool ok = discriminant(g2, g3) == level_discriminant_formula(level);
                 parts.push_back({ok, "level " + std::to_string(level) + (ok ? " matches" : " differs")});
             }
             return all_of(parts);
         }},
    };
}

// ---------------------------------------------------------------- ode

std::vector<Check> ode_checks(const RunConfig &cfg)
{
    const int n = cfg.order;
    return {
        {"ode.stated-coefficients", "coefficients x^1 .. x^6 of the Krichever exponential", [n] {
             const LaurentSeries f = fkr_from_ode(KrParams::symbolic(), n);
             const std::array<const char *, 6> stated{
                 "1",
                 "alpha",
                 "1/2*(alpha^2 + beta)",
                 "1/6*(alpha^3 + 3*alpha*beta - gamma)",
                 "1/120*(5*alpha^4 + 30*alpha^2*beta + 45*beta^2 - 20*alpha*gamma - 3*lambda)",
                 "1/120*(alpha^5 + 10*alpha^3*beta + 45*alpha*beta^2 - 10*alpha^2*gamma - 22*beta*gamma - "
                 "3*alpha*lambda)"};
             for (int d = 1; d <= 6; ++d) {
                 if (f.coeff(d) != P_(stated[static_cast<std::size_t>(d - 1)])) {
                     return Outcome{false, "x^" + std::to_string(d) + " is " + to_string(f.coeff(d))};
                 }
             }
             return Outcome{true, "x^1 .. x^6 match"};
         }},
        {"ode.feq-residual", "f f''' - 3 f' f'' = C1 f'^2 + C2 f f' + C3 f^2", [n] {
             const KrParams p = KrParams::symbolic();
             return zero_series(feq_residual(fkr_from_ode(p, n), kr_ode_constants(p)), "residual");
         }},
        {"ode.level-series", "level 2, 3, 4 exponentials through x^5", [n] {
             std::vector<Outcome> parts;
             for (int level = 2; level <= 4; ++level) {
                 const bool ok = level_exponential(level, n).truncated(5) == stated_level_series(level);
                 parts.push_back({ok, "level " + std::to_string(level) + (ok ? " matches" : " differs")});
             }
             return all_of(parts);
         }},
        {"ode.jacobi", "level 2: f'^2 = 1 - 2 delta f^2 + epsilon f^4", [n] {
             return zero_series(jacobi_residual(level_exponential(2, n), sym(Symbol::delta), sym(Symbol::epsilon)),
                                "Jacobi residual");
         }},
        {"ode.oddness", "the level 2 exponential is odd, levels 3 and 4 are not", [n] {
             const LaurentSeries f2 = level_exponential(2, n);
             bool odd = true;
             for (int d = 0; d <= n; d += 2) {
                 odd = odd && f2.coeff(d).is_zero();
             }
             const bool others = level_exponential(3, n).coeff(2) == sym(Symbol::alpha) &&
                                 level_exponential(4, n).coeff(2) == sym(Symbol::alpha);
             return Outcome{odd && others, odd ? "f2 odd; x^2 coefficient alpha for levels 3, 4" : "f2 not odd"};
         }},
        {"ode.end-uniqueness", "End equation fixes f_k through (k+1)(3k-8) f_k = P_k", [n] {
             const int order = std::max(n, 13);
             std::vector<SolvedStep> steps;
             const LaurentSeries f = end_equation_solution(order, &steps);
             std::optional<BigRational> ratio;
             for (const auto &s : steps) {
                 const long k = s.degree - 1;
                 const BigRational r = s.factor / BigRational((k + 1) * (3 * k - 8));
                 if (ratio && r != *ratio) {
                     return Outcome{false, "factor at k = " + std::to_string(k) + " is not proportional"};
                 }
                 ratio = r;
             }
             const MultiPoly a = sym(Symbol::A1) * BigRational(1, 2);
             const Bindings to_end{{Symbol::alpha, a},
                                   {Symbol::beta, (a * a + MultiPoly(2) * sym(Symbol::B2)) * BigRational(1, 3)}};
             const LaurentSeries f4 = substitute(level_exponential(4, order), to_end);
             const Outcome same = zero_series(f - f4, "difference from the level 4 exponential");
             return Outcome{same.passed, "factor = " + ratio->to_string() + " (k+1)(3k-8) for k = 3.." +
                                             std::to_string(order - 1) + "; " + same.detail};
         }},
    };
}

// ---------------------------------------------------------------- formalgroup

std::vector<Check> formalgroup_checks(const RunConfig &cfg)
{
    const int d = cfg.cap;
    const int n = std::max(cfg.order, d + 2);
    auto f4 = std::make_shared<LaurentSeries>(level_exponential(4, n));
    auto F4 = std::make_shared<BivariateSeries>(fg_from_exp(*f4, d));
    auto ab4 = std::make_shared<ABPair>(extract_AB(*f4));
    const std::uint64_t seed = cfg.seed;
    auto level_form = [n](int level) {
        return [n, level] {
            const ABPair ab = extract_AB(level_exponential(level, n + 1));
            return zero_series(level_form_residual(level, ab), "level " + std::to_string(level) + " form residual");
        };
    };
    return {
        {"formalgroup.axioms", "unit, commutativity and associativity of the level 4 group", [=] {
             const AxiomReport r = fg_axiom_check(*F4);
             if (r.passed()) {
                 return Outcome{true, "pass to degree " + std::to_string(r.cap) + ", associativity to " +
                                          std::to_string(r.assoc_cap)};
             }
             const auto &f = r.failures.front();
             return Outcome{false, f.axiom + " fails at " + exponent_text(f.exponent, 3)};
         }},
        {"formalgroup.addition-law", "f(x + y) = F(f(x), f(y))", [=] {
             const LaurentSeries fc = f4->truncated(d);
             const std::array<MultiSeries, 2> args{compose(fc, MultiSeries::variable(0, 2)),
                                                   compose(fc, MultiSeries::variable(1, 2))};
             const MultiSeries lhs = compose(fc, MultiSeries::variable(0, 2) + MultiSeries::variable(1, 2));
             const MultiSeries diff = (substitute_vars(*F4, args, d) - lhs).truncated(d);
             return Outcome{diff.is_zero(), diff.is_zero() ? "holds to degree " + std::to_string(d)
                                                           : "fails to degree " + std::to_string(d)};
         }},
        {"formalgroup.level4-constants", "A1 = 2 alpha, -2 B2 = alpha^2 - 3 beta, A2 = B1 = 0", [=] {
             const bool ok = ab4->A1 == P_("2*alpha") && ab4->B2 == P_("1/2*(3*beta - alpha^2)") &&
                             ab4->A.coeff(0) == MultiPoly(1) && ab4->B.coeff(0) == MultiPoly(1) &&
                             ab4->A.coeff(2).is_zero() && ab4->B.coeff(1).is_zero();
             return Outcome{ok, "A1 = " + to_string(ab4->A1) + ", B2 = " + to_string(ab4->B2)};
         }},
        {"formalgroup.buchstaber-form", "F (u B(v) - v B(u)) = u^2 A(v) - v^2 A(u) for the generic exponential",
         [=] {
             const LaurentSeries f = fkr_from_ode(KrParams::symbolic(), n);
             const MultiSeries r = buchstaber_residual(fg_from_exp(f, d), extract_AB(f));
             return Outcome{r.is_zero(), r.is_zero() ? "zero to degree " + std::to_string(d) : "nonzero residual"};
         }},
        {"formalgroup.level2-form", "level 2: A = 1", level_form(2)},
        {"formalgroup.level3-form", "level 3: B = A^2 - 2 A1 u", level_form(3)},
        {"formalgroup.level4-form", "level 4: (2B + 3 A1 u)^2 = 4 A^3 - (3 A1^2 - 8 B2) u^2 A^2", level_form(4)},
        {"formalgroup.generic-not-level4", "the generic exponential violates the level 4 relation", [n] {
             const LaurentSeries r = level_form_residual(4, extract_AB(fkr_from_ode(KrParams::symbolic(), n)));
             const bool depends = mentions(r, Symbol::lambda);
             return Outcome{!r.is_zero() && depends, "first nonzero at u^" + std::to_string(r.valuation()) +
                                                         (depends ? ", depends on lambda" : ", free of lambda")};
         }},
        {"formalgroup.ab-roundtrip", "group rebuilt from (A, B) gives back the exponential and the pair", [=] {
             const BivariateSeries rebuilt = fg_from_AB(*ab4, d);
             const LaurentSeries f = exp_from_fg(rebuilt);
             const ABPair again = extract_AB(f);
             const bool ok = (rebuilt - *F4).is_zero() && again.A1 == ab4->A1 && again.B2 == ab4->B2 &&
                             (again.A - ab4->A.truncated(again.A.trunc())).is_zero() &&
                             (again.B - ab4->B.truncated(again.B.trunc())).is_zero();
             return Outcome{ok, ok ? "round trip exact to degree " + std::to_string(d) : "round trip differs"};
         }},
        {"formalgroup.numeric-addition", "level 2 at delta = 1, epsilon = 1/4: f(x+y) = F(f(x), f(y)) numerically",
         [seed] {
             const Bindings at{{Symbol::delta, MultiPoly(1)}, {Symbol::epsilon, MultiPoly(BigRational(1, 4))}};
             const LaurentSeries f = substitute(level_exponential(2, 12), at);
             const double err = addition_law_error(f, fg_from_exp(f, 12), seed, 20, 0.05);
             char buf[64];
             std::snprintf(buf, sizeof buf, "max relative error %.3e", err);
             return Outcome{err <= 1e-8, buf};
         }},
    };
}

// ---------------------------------------------------------------- hirzebruch

std::vector<Check> hirzebruch_checks(const RunConfig &cfg)
{
    const int cap3 = cfg.hirzebruch_cap(3);
    const int cap4 = cfg.hirzebruch_cap(4);
    auto derived = [](int players, int cap, Bindings expected) {
        return [=] {
            const ConstraintReport r = derive_constraints(players, cap);
            const Bindings got(r.bindings.begin(), r.bindings.end());
            std::string text;
            for (const auto &[s, v] : r.bindings) {
                text += (text.empty() ? "" : "; ") + std::string(name(s)) + " = " + to_string(v);
            }
            const bool ok = got == expected && r.consistent();
            return Outcome{ok, text + "; " + std::to_string(r.redundant_checks) + " redundant checks vanish"};
        };
    };
    auto level = [](int level_, int players, int cap, bool expect_zero) {
        return [=] {
            const LevelReport r = verify_level(level_, players, cap);
            if (r.zero()) {
                return Outcome{expect_zero, "zero to degree " + std::to_string(cleared_base_degree(players) + cap)};
            }
            return Outcome{!expect_zero, "first nonzero at " + exponent_text(r.first_nonzero->first,
                                                                             static_cast<std::size_t>(players - 1))};
        };
    };
    Bindings three = level_relations(3);
    Bindings four = level_relations(4);
    return {
        {"hirzebruch.constraints-players2", "N = 2 forces alpha = gamma = 0",
         derived(2, cap3, {{Symbol::alpha, MultiPoly{}}, {Symbol::gamma, MultiPoly{}}})},
        {"hirzebruch.constraints-players3", "N = 3: beta = 3 alpha^2, lambda = 12 alpha (9 alpha^3 + gamma)",
         derived(3, cap3, three)},
        {"hirzebruch.constraints-players4",
         "N = 4: gamma = 4 alpha (4 alpha^2 - 3 beta), lambda = 4 (32 alpha^4 - 24 alpha^2 beta + 3 beta^2)",
         derived(4, cap4, four)},
        {"hirzebruch.level2-players2", "level 2 solves the N = 2 equation", level(2, 2, cap3, true)},
        {"hirzebruch.level2-players4", "level 2 solves the N = 4 equation", level(2, 4, cap4, true)},
        {"hirzebruch.level3-players3", "level 3 solves the N = 3 equation", level(3, 3, cap3, true)},
        {"hirzebruch.level4-players4", "level 4 solves the N = 4 equation", level(4, 4, cap4, true)},
        {"hirzebruch.level3-players4", "level 3 does not solve the N = 4 equation", level(3, 4, cap4, false)},
    };
}

// ---------------------------------------------------------------- closedforms

std::vector<Check> closedform_checks(const RunConfig &cfg)
{
    static const std::map<std::string, std::string> anchors{
        {"feq4", "level 4 closed form solves the ODE with C1 = -6a, C2 = 6(a^2 - b), C3 = 6a(5a^2 - 3b)"},
        {"series4", "level 4 closed form expands to the stated series"},
        {"end4", "level 4 closed form solves the End equation with A1 = 2a, -2 B2 = a^2 - 3b"},
        {"ode3", "level 3 closed form solves the ODE with C1 = -6a, C2 = -12a^2, C3 = 2g + 16a^3"},
        {"series3", "level 3 closed form expands to the stated series"},
        {"ode2", "level 2 closed forms solve f f''' - 3 f' f'' = 4 delta f f'"},
    };
    std::vector<Check> out;
    const int n = cfg.order;
    for (const auto &name_ : assertion_names()) {
        out.push_back({"closedforms." + name_, anchors.at(name_), [name_, n] {
                           std::vector<Outcome> parts;
                           std::string residual = "0";
                           for (const auto &r : assertion_suite(name_, n)) {
                               if (residual == "0" && !r.passed()) {
                                   residual = r.exact_pass ? "nonzero series residual" : r.residual;
                               }
                               std::string detail = r.assertion + (r.exact_pass ? ": exact zero" : ": residual " + r.residual);
                               if (!r.detail.empty()) {
                                   detail += " (" + r.detail + ")";
                               }
                               parts.push_back({r.passed(), detail});
                           }
                           Outcome out = all_of(parts);
                           out.residual = residual;
                           return out;
                       }});
    }
    return out;
}

// ---------------------------------------------------------------- isogeny

std::vector<Check> isogeny_checks(const RunConfig &)
{
    return {
        {"isogeny.index2-discriminants", "index 2 invariants and both discriminants", [] {
             return identities(discriminant_checks(index2_invariants(sym(Symbol::a1), sym(Symbol::a2))));
         }},
        {"isogeny.example1", "first level 2 example: g3~ = 4c^3 - c g2~",
         [] { return identities(level2_example_relations(1).checks); }},
        {"isogeny.example2", "second level 2 example at a = b",
         [] { return identities(level2_example_relations(2).checks); }},
        {"isogeny.example3", "third level 2 example discriminants",
         [] { return identities(level2_example_relations(3).checks); }},
        {"isogeny.level4-keystone", "level 4 sublattice and base invariants from the third example",
         [] { return identities(level4_keystone_checks()); }},
        {"isogeny.level4-base", "level 4 base invariants equal the Krichever invariants and discriminant", [] {
             const auto [g2, g3] = level4_base_invariants(sym(Symbol::alpha), sym(Symbol::beta));
             const auto [k2, k3] = level_invariants(4);
             return identities({{"g2 = lambda", g2, k2},
                                {"g3 = 4 beta^3 - lambda beta - gamma^2", g3, k3},
                                {"discriminant", discriminant(g2, g3), level_discriminant_formula(4)}});
         }},
    };
}

using SuiteBuilder = std::vector<Check> (*)(const RunConfig &);

const std::map<std::string, SuiteBuilder> &builders()
{
    static const std::map<std::string, SuiteBuilder> b{
        {"weierstrass", weierstrass_checks}, {"ode", ode_checks},
        {"formalgroup", formalgroup_checks}, {"hirzebruch", hirzebruch_checks},
        {"closedforms", closedform_checks},  {"isogeny", isogeny_checks},
    };
    return b;
}

} // namespace

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"all",        "weierstrass", "ode",    "formalgroup",
                                                "hirzebruch", "closedforms", "isogeny"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string &suite, const RunConfig &cfg)
{
    std::vector<Check> checks;
    for (const auto &[name_, build] : builders()) {
        if (suite == "all" || suite == name_) {
            auto part = build(cfg);
            checks.insert(checks.end(), part.begin(), part.end());
        }
    }
    if (checks.empty()) {
        throw UsageError("unknown suite '" + suite + "'");
    }
    std::vector<CheckResult> out;
    for (const auto &c : checks) {
        CheckResult r{c.id, c.anchor, false, "", std::nullopt, 0.0};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const Outcome o = c.run();
            r.passed = o.passed;
            r.detail = o.detail;
            r.residual = o.residual;
        } catch (const std::exception &e) {
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const CheckResult &a, const CheckResult &b) { return a.id < b.id; });
    return out;
}

double addition_law_error(const LaurentSeries &f, const BivariateSeries &F, std::uint64_t seed, int count,
                          double radius)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&] { return std::polar(radius * unit(rng), 2.0 * 3.14159265358979323846 * unit(rng)); };
    const std::map<Symbol, std::complex<double>> none;
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        const std::complex<double> x = draw();
        const std::complex<double> y = draw();
        const std::complex<double> lhs = eval(f, none, x + y);
        const std::array<std::complex<double>, 2> uv{eval(f, none, x), eval(f, none, y)};
        const std::complex<double> rhs = eval(F, none, uv);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    return worst;
}

} // namespace ellevel::cli
