#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ellevel/poly.hpp"

namespace ellevel
{

/// Invariants of a lattice and of an index-2 sublattice, parameterized by a1, a2.
struct IsogenyRecord {
    MultiPoly a1;
    MultiPoly a2;
    MultiPoly b1;
    MultiPoly g2;
    MultiPoly g3;
    MultiPoly g2_tilde;
    MultiPoly g3_tilde;
    MultiPoly delta;
    MultiPoly delta_tilde;

    /// (name, value) pairs in a fixed order, for serialization.
    std::vector<std::pair<std::string, MultiPoly>> fields() const;
};

///   b1 = a1 + a2,  g2 = 4 (a1 + 3 a2)(3 a1 + a2),  g3 = -8 (a1 + a2)(a1 - a2)^2,
///   g2~ = g2 - 20 a1 a2,  g3~ = g3 - 28 a1 a2 b1,
///   delta = 256 a1 a2 (9 b1^2 - 4 a1 a2)^2,  delta~ = 16 a1^2 a2^2 (9 b1^2 - 4 a1 a2)
IsogenyRecord index2_invariants(const MultiPoly &a1, const MultiPoly &a2);

/// A polynomial identity lhs == rhs together with its difference.
struct IdentityCheck {
    std::string name;
    MultiPoly lhs;
    MultiPoly rhs;

    MultiPoly difference() const { return lhs - rhs; }
    bool holds() const { return lhs == rhs; }
};

/// delta == g2^3 - 27 g3^2 and delta~ == g2~^3 - 27 g3~^2.
std::vector<IdentityCheck> discriminant_checks(const IsogenyRecord &r);

/// Sublattice invariants for the level-4 curve:
///   g2~ = -(13 alpha^4 - 6 alpha^2 beta - 3 beta^2) / 4,  g3~ = (alpha^2 - beta)(17 alpha^4 - 14 alpha^2 beta + beta^2) / 8
std::pair<MultiPoly, MultiPoly> level4_sublattice(const MultiPoly &alpha, const MultiPoly &beta);

/// Base invariants of the level-4 curve:
///   g2 = 4 (32 alpha^4 - 24 alpha^2 beta + 3 beta^2),  g3 = -8 (2 alpha^2 - beta)(16 alpha^4 - 8 alpha^2 beta - beta^2)
std::pair<MultiPoly, MultiPoly> level4_base_invariants(const MultiPoly &alpha, const MultiPoly &beta);

/// a = (-3 alpha^2 + beta) / 4, b = (alpha^2 - beta) / 2.
Bindings level4_to_example3();

struct ExampleRelations {
    int example = 0;
    /// Stated relations, as symbol-like name -> polynomial in the example's parameters a, b.
    std::vector<std::pair<std::string, MultiPoly>> relations;
    /// Internal identities of the example.
    std::vector<IdentityCheck> checks;
};

/// Parameter relations of the three level-2 examples, in the parameters a, b.
ExampleRelations level2_example_relations(int example);

/// The sublattice formulas for level 4 against the third example after level4_to_example3,
/// and that example's base invariants against level4_base_invariants.
std::vector<IdentityCheck> level4_keystone_checks();

} // namespace ellevel
