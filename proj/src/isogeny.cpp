#include "ellevel/isogeny.hpp"

#include <stdexcept>

#include "ellevel/weierstrass.hpp"

namespace ellevel
{

namespace
{

MultiPoly P_(const char *text) { return parse_poly(text); }

MultiPoly disc(const MultiPoly &g2, const MultiPoly &g3) { return discriminant(g2, g3); }

} // namespace

std::vector<std::pair<std::string, MultiPoly>> IsogenyRecord::fields() const
{
    return {{"a1", a1},           {"a2", a2},       {"b1", b1},    {"g2", g2},
            {"g3", g3},           {"g2_tilde", g2_tilde}, {"g3_tilde", g3_tilde},
            {"delta", delta},     {"delta_tilde", delta_tilde}};
}

IsogenyRecord index2_invariants(const MultiPoly &a1, const MultiPoly &a2)
{
    IsogenyRecord r;
    r.a1 = a1;
    r.a2 = a2;
    r.b1 = a1 + a2;
    const MultiPoly prod = a1 * a2;
    r.g2 = MultiPoly(4) * (a1 + MultiPoly(3) * a2) * (MultiPoly(3) * a1 + a2);
    r.g3 = MultiPoly(-8) * r.b1 * pow(a1 - a2, 2);
    r.g2_tilde = r.g2 - MultiPoly(20) * prod;
    r.g3_tilde = r.g3 - MultiPoly(28) * prod * r.b1;
    const MultiPoly k = MultiPoly(9) * r.b1 * r.b1 - MultiPoly(4) * prod;
    r.delta = MultiPoly(256) * prod * k * k;
    r.delta_tilde = MultiPoly(16) * prod * prod * k;
    return r;
}

std::vector<IdentityCheck> discriminant_checks(const IsogenyRecord &r)
{
    return {
        {"delta = g2^3 - 27 g3^2", r.delta, disc(r.g2, r.g3)},
        {"delta~ = g2~^3 - 27 g3~^2", r.delta_tilde, disc(r.g2_tilde, r.g3_tilde)},
    };
}

std::pair<MultiPoly, MultiPoly> level4_sublattice(const MultiPoly &alpha, const MultiPoly &beta)
{
    const Bindings at{{Symbol::alpha, alpha}, {Symbol::beta, beta}};
    return {substitute(P_("-1/4*(13*alpha^4 - 6*alpha^2*beta - 3*beta^2)"), at),
            substitute(P_("1/8*(alpha^2 - beta)*(17*alpha^4 - 14*alpha^2*beta + beta^2)"), at)};
}

std::pair<MultiPoly, MultiPoly> level4_base_invariants(const MultiPoly &alpha, const MultiPoly &beta)
{
    const Bindings at{{Symbol::alpha, alpha}, {Symbol::beta, beta}};
    return {substitute(P_("4*(32*alpha^4 - 24*alpha^2*beta + 3*beta^2)"), at),
            substitute(P_("-8*(2*alpha^2 - beta)*(16*alpha^4 - 8*alpha^2*beta - beta^2)"), at)};
}

Bindings level4_to_example3()
{
    return {{Symbol::a, P_("1/4*(-3*alpha^2 + beta)")}, {Symbol::b, P_("1/2*(alpha^2 - beta)")}};
}

ExampleRelations level2_example_relations(int example)
{
    ExampleRelations out;
    out.example = example;
    switch (example) {
    case 1: {
        // the printed second "g2~" line is read as g3~
        const MultiPoly c = P_("-a - b");
        const MultiPoly g2t = P_("4*(a^2 + a*b + b^2)");
        const MultiPoly g3t = P_("4*a*b*(-a - b)");
        out.relations = {{"c", c}, {"g2_tilde", g2t}, {"g3_tilde", g3t}, {"beta", MultiPoly(-2) * c}};
        out.checks = {
            {"g3~ = 4 c^3 - c g2~", g3t, MultiPoly(4) * pow(c, 3) - c * g2t},
        };
        break;
    }
    case 2: {
        const MultiPoly g2t = P_("2*(a^2 + 4*a*b + b^2)");
        const MultiPoly g3t = P_("-1/2*(a + b)*(a^2 + 6*a*b + b^2)");
        out.relations = {{"g2_tilde", g2t}, {"g3_tilde", g3t}, {"delta_tilde", disc(g2t, g3t)}};
        const Bindings equal{{Symbol::b, P_("a")}};
        out.checks = {
            {"g2~ at a = b", substitute(g2t, equal), P_("12*a^2")},
            {"g3~ at a = b", substitute(g3t, equal), P_("-8*a^3")},
            {"delta~ at a = b", substitute(disc(g2t, g3t), equal), MultiPoly{}},
        };
        break;
    }
    case 3: {
        const MultiPoly g2t = P_("-4*(a^2 - 2*a*b - 2*b^2)");
        const MultiPoly g3t = P_("4*b*(a^2 - 2*a*b - b^2)");
        const MultiPoly g2 = P_("4*(44*a^2 - 28*a*b - 13*b^2)");
        const MultiPoly g3 = P_("8*(2*a - b)*(28*a^2 - 12*a*b - 17*b^2)");
        const MultiPoly delta = P_("1024*(2*a + b)*(a - b)*(2*a - 5*b)^4");
        const MultiPoly delta_t = P_("-16*(2*a + b)*(2*a - 5*b)*(a - b)^4");
        out.relations = {{"c", P_("2*b - a")},   {"g2_tilde", g2t}, {"g3_tilde", g3t},
                         {"wp_omega1", P_("2*(b - 2*a)")}, {"g2", g2}, {"g3", g3},
                         {"delta", delta},       {"delta_tilde", delta_t}};
        out.checks = {
            {"delta = g2^3 - 27 g3^2", delta, disc(g2, g3)},
            {"delta~ = g2~^3 - 27 g3~^2", delta_t, disc(g2t, g3t)},
        };
        break;
    }
    default:
        throw std::invalid_argument("level2_example_relations: example must be 1, 2 or 3");
    }
    return out;
}

std::vector<IdentityCheck> level4_keystone_checks()
{
    const MultiPoly alpha = MultiPoly::symbol(Symbol::alpha);
    const MultiPoly beta = MultiPoly::symbol(Symbol::beta);
    const auto [g2t, g3t] = level4_sublattice(alpha, beta);
    const auto [g2, g3] = level4_base_invariants(alpha, beta);
    const ExampleRelations ex3 = level2_example_relations(3);
    const Bindings sub = level4_to_example3();
    auto relation = [&](const std::string &name) {
        for (const auto &[n, v] : ex3.relations) {
            if (n == name) {
                return substitute(v, sub);
            }
        }
        throw std::logic_error("missing relation " + name);
    };
    return {
        {"sublattice g2~ = example g2~", g2t, relation("g2_tilde")},
        {"sublattice g3~ = example g3~", g3t, relation("g3_tilde")},
        {"base g2 = example g2", g2, relation("g2")},
        {"base g3 = example g3", g3, relation("g3")},
    };
}

} // namespace ellevel
