#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nlg/game.hpp"
#include "nlg/generators.hpp"

namespace nlg {

enum class Side { Alice, Bob };

struct ClassicalResult {
  double value = 0.0;
  std::optional<Rational> value_exact;  // present when pi is rational
  DeterministicStrategy strategy;
  Side enumerated_side = Side::Bob;
  std::uint64_t work_factor = 0;  // candidate functions evaluated
};

inline constexpr std::uint64_t kDefaultWorkCap = std::uint64_t(1) << 26;

// Exact omega_c by enumerating the smaller function space (Gray-code order,
// incremental objective) and best-responding on the other side per question.
ClassicalResult classical_value(const ValidatedGame& game, std::uint64_t cap = kDefaultWorkCap);

// Exact omega_c for XOR games: value = tau + (1/2) max sum D a(s) b(t) over
// sign vectors, with the optimal a(s) = sign(sum_t D(s,t) b_t), sign(0) = +1.
ClassicalResult classical_value_xor(const XorGame& x, std::uint64_t cap = kDefaultWorkCap);

struct KsSearchResult {
  bool colorable = false;
  std::vector<std::uint8_t> coloring;  // valid {0,1}-coloring when colorable
  std::uint64_t nodes = 0;             // decision nodes explored
};

// Backtracking with unit propagation over the two constraint families:
// no orthogonal pair both 1; every declared triple has at least one 1.
KsSearchResult ks_color_search(const KsVectorSet& ks);

}  // namespace nlg
