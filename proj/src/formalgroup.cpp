#include "ellevel/formalgroup.hpp"

#include <array>
#include <stdexcept>

#include "ellevel/krichever.hpp"

namespace ellevel
{

namespace
{

void require_unit_exponential(const LaurentSeries &f, const char *who)
{
    if (f.valuation() != 1 || f.coeff(1) != MultiPoly(1)) {
        throw SeriesError(std::string(who) + ": series must be x + O(x^2)");
    }
}

/// s(x_var) as a series in `nvars` variables.
MultiSeries lift(const LaurentSeries &s, std::size_t var, std::size_t nvars)
{
    return compose(s, MultiSeries::variable(var, nvars));
}

/// S / (u - v) for a bivariate series divisible by u - v.
MultiSeries divide_by_difference(const MultiSeries &s)
{
    std::map<int, std::map<int, MultiPoly>> by_degree; // degree -> (du -> coeff)
    for (const auto &[e, c] : s.terms()) {
        by_degree[e[0] + e[1]][e[0]] = c;
    }
    MultiSeries out(2, s.is_exact() ? kExact : s.cap() - 1);
    for (const auto &[d, row] : by_degree) {
        auto s_at = [&](int i) {
            auto it = row.find(i);
            return it == row.end() ? MultiPoly{} : it->second;
        };
        MultiPoly q = -s_at(0);
        for (int i = 0; i < d; ++i) {
            if (i > 0) {
                q = q - s_at(i);
            }
            out.add_term({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(d - 1 - i)}, q);
        }
        if (q != s_at(d)) {
            throw SeriesError("series is not divisible by u - v");
        }
    }
    return out;
}

/// 1 / s for a multivariate series with constant term 1.
MultiSeries unit_inverse(const MultiSeries &s)
{
    if (s.coeff(SeriesExponent{}) != MultiPoly(1)) {
        throw SeriesError("unit_inverse: constant term must be 1");
    }
    const MultiSeries rest = s - MultiSeries::constant(MultiPoly(1), s.nvars());
    std::vector<MultiPoly> geometric;
    for (int k = 0; k <= s.cap(); ++k) {
        geometric.emplace_back(k % 2 == 0 ? 1 : -1);
    }
    return compose(LaurentSeries::from_coeffs(0, std::move(geometric), s.cap()), rest);
}

} // namespace

BivariateSeries fg_from_exp(const LaurentSeries &f, int cap)
{
    require_unit_exponential(f, "fg_from_exp");
    const LaurentSeries fc = f.truncated(cap);
    const LaurentSeries g = reversion(fc);
    const MultiSeries sum = lift(g, 0, 2) + lift(g, 1, 2);
    return compose(fc, sum).truncated(cap);
}

LaurentSeries exp_from_fg(const BivariateSeries &F)
{
    if (F.nvars() != 2) {
        throw std::invalid_argument("exp_from_fg: expected a bivariate series");
    }
    std::vector<MultiPoly> dv(static_cast<std::size_t>(F.cap()));
    for (const auto &[e, c] : F.terms()) {
        if (e[1] == 1) {
            dv[e[0]] = c;
        }
    }
    const LaurentSeries h = LaurentSeries::from_coeffs(0, std::move(dv), F.cap() - 1);
    return reversion(integrate(inverse(h)));
}

AxiomReport fg_axiom_check(const BivariateSeries &F)
{
    AxiomReport report;
    report.cap = F.cap();
    report.assoc_cap = F.cap() - 2;
    for (const auto &[e, c] : F.terms()) {
        const bool on_axis = e[0] == 0 || e[1] == 0;
        const bool linear = total_degree(e) == 1;
        if (on_axis && !(linear && c == MultiPoly(1))) {
            report.failures.push_back({"unit", e, linear ? c - MultiPoly(1) : c});
        }
    }
    for (const SeriesExponent &e : {SeriesExponent{1, 0}, SeriesExponent{0, 1}}) {
        if (F.terms().find(e) == F.terms().end()) {
            report.failures.push_back({"unit", e, MultiPoly(-1)});
        }
    }
    const std::array<std::size_t, 2> swap{1, 0};
    const MultiSeries comm = F - F.permuted(swap);
    for (const auto &[e, c] : comm.terms()) {
        report.failures.push_back({"commutativity", e, c});
    }
    const std::array<std::size_t, 2> uv{0, 1};
    const std::array<std::size_t, 2> vw{1, 2};
    const MultiSeries F_uv = F.embedded(3, uv);
    const MultiSeries F_vw = F.embedded(3, vw);
    const std::array<MultiSeries, 2> left_args{F_uv, MultiSeries::variable(2, 3)};
    const std::array<MultiSeries, 2> right_args{MultiSeries::variable(0, 3), F_vw};
    const MultiSeries assoc =
        (substitute_vars(F, left_args, report.assoc_cap) - substitute_vars(F, right_args, report.assoc_cap))
            .truncated(report.assoc_cap);
    for (const auto &[e, c] : assoc.terms()) {
        report.failures.push_back({"associativity", e, c});
    }
    return report;
}

ABPair extract_AB(const LaurentSeries &f)
{
    require_unit_exponential(f, "extract_AB");
    ABPair ab;
    const LaurentSeries g = reversion(f);
    ab.A1 = f.coeff(2) * BigRational(2);
    ab.B2 = ab.A1 * ab.A1 - g.coeff(3) * BigRational(3);
    const LaurentSeries d1 = derivative(f);
    const LaurentSeries d2 = derivative(d1);
    ab.B = compose(d1 - f * ab.A1, g);
    const LaurentSeries a2 =
        (d1 * d1) * MultiPoly(2) - f * d2 - (f * d1) * ab.A1 - (f * f) * (ab.B2 * BigRational(2));
    ab.A = compose(a2, g) * MultiPoly(BigRational(1, 2));
    return ab;
}

BivariateSeries fg_from_AB(const ABPair &ab, int cap)
{
    const MultiSeries u = MultiSeries::variable(0, 2);
    const MultiSeries v = MultiSeries::variable(1, 2);
    // one degree is lost to the division by u - v
    const int inner = cap + 1;
    const MultiSeries Au = lift(ab.A, 0, 2).truncated(inner);
    const MultiSeries Av = lift(ab.A, 1, 2).truncated(inner);
    const MultiSeries Bu = lift(ab.B, 0, 2).truncated(inner);
    const MultiSeries Bv = lift(ab.B, 1, 2).truncated(inner);
    const MultiSeries num = divide_by_difference((u * u * Av - v * v * Au).truncated(inner));
    const MultiSeries den = divide_by_difference((u * Bv - v * Bu).truncated(inner));
    return (num * unit_inverse(den)).truncated(cap);
}

BivariateSeries buchstaber_residual(const BivariateSeries &F, const ABPair &ab)
{
    const MultiSeries u = MultiSeries::variable(0, 2);
    const MultiSeries v = MultiSeries::variable(1, 2);
    const MultiSeries den = u * lift(ab.B, 1, 2) - v * lift(ab.B, 0, 2);
    const MultiSeries num = u * u * lift(ab.A, 1, 2) - v * v * lift(ab.A, 0, 2);
    const MultiSeries r = F * den - num;
    return r.truncated(F.cap());
}

LaurentSeries level_form_residual(int level, const ABPair &ab)
{
    const LaurentSeries one = LaurentSeries::constant(MultiPoly(1));
    const LaurentSeries u = LaurentSeries::variable();
    switch (level) {
    case 2:
        return ab.A - one;
    case 3:
        return ab.B - ab.A * ab.A + u * (ab.A1 * BigRational(2));
    case 4: {
        const LaurentSeries lhs = ab.B * MultiPoly(2) + u * (ab.A1 * BigRational(3));
        const MultiPoly k = MultiPoly(3) * ab.A1 * ab.A1 - MultiPoly(8) * ab.B2;
        const LaurentSeries a2 = ab.A * ab.A;
        return lhs * lhs - a2 * ab.A * MultiPoly(4) + (u * u * a2) * k;
    }
    default:
        throw std::invalid_argument("level_form_residual: level must be 2, 3 or 4");
    }
}

LaurentSeries end_equation_residual(const LaurentSeries &f, const MultiPoly &A1, const MultiPoly &B2)
{
    const LaurentSeries d1 = derivative(f);
    const LaurentSeries d2 = derivative(d1);
    const LaurentSeries ff2 = f * d2;
    const LaurentSeries ff1 = f * d1;
    const LaurentSeries f11 = d1 * d1;
    const LaurentSeries f00 = f * f;
    const LaurentSeries lin = d1 * MultiPoly(2) + f * A1;
    const LaurentSeries first = f11 * MultiPoly(4) - ff2 * MultiPoly(2) - ff1 * (MultiPoly(2) * A1) -
                                f00 * (MultiPoly(3) * A1 * A1 - MultiPoly(4) * B2);
    const LaurentSeries second = f11 * MultiPoly(2) - ff2 - ff1 * A1 - f00 * (MultiPoly(2) * B2);
    return (lin * lin) * MultiPoly(4) - first * second * second;
}

LaurentSeries end_equation_solution(int order, std::vector<SolvedStep> *steps)
{
    if (order < 3) {
        throw std::invalid_argument("end_equation_solution: order must be at least 3");
    }
    const MultiPoly A1 = MultiPoly::symbol(Symbol::A1);
    const MultiPoly B2 = MultiPoly::symbol(Symbol::B2);
    const MultiPoly f1 = A1 * BigRational(1, 2);
    const MultiPoly f2 = (B2 + MultiPoly(2) * f1 * f1) * BigRational(1, 3);
    const LaurentSeries seed = LaurentSeries::from_coeffs(0, {MultiPoly{}, MultiPoly(1), f1, f2}, 3);
    return solve_coefficientwise(seed, order, -1,
                                 [&](const LaurentSeries &f) { return end_equation_residual(f, A1, B2); }, steps);
}

} // namespace ellevel
