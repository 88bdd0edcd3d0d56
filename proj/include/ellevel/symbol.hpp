#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ellevel
{

/// Closed universe of parameter symbols. Declaration order is the variable
/// precedence used by the graded-lex term order and by canonical text.
enum class Symbol : std::uint8_t {
    alpha,
    beta,
    gamma,
    lambda,
    g2,
    g3,
    delta,
    epsilon,
    A1,
    B2,
    a,
    a1,
    a2,
    b,
    b1,
    c,
    w,
};

inline constexpr std::size_t kSymbolCount = 17;

inline constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {
    "alpha", "beta", "gamma", "lambda", "g2", "g3", "delta", "epsilon", "A1",
    "B2",    "a",    "a1",    "a2",     "b",  "b1", "c",     "w",
};

constexpr std::string_view name(Symbol s) { return kSymbolNames[static_cast<std::size_t>(s)]; }

constexpr std::size_t index(Symbol s) { return static_cast<std::size_t>(s); }

constexpr std::optional<Symbol> symbol_from_name(std::string_view text)
{
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
        if (kSymbolNames[i] == text) {
            return static_cast<Symbol>(i);
        }
    }
    return std::nullopt;
}

} // namespace ellevel
