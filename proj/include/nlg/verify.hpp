#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nlg/game.hpp"

namespace nlg {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the full verification suite (one or more checks per criterion).
std::vector<CheckResult> run_paper_checks(std::uint64_t seed);

// Renders the table and returns true when everything passed.
bool print_paper_checks(const std::vector<CheckResult>& results, std::ostream& out);

// Reference implementations kept deliberately independent of the solvers.
// Full double enumeration over both function spaces; exact-rational games
// only, and n_a^n_s * n_b^n_t must stay small.
Rational naive_classical_value(const ValidatedGame& game);

// Planted perfect binary games for the extraction criterion: an XOR-consistent
// win set around random answer functions, plus arbitrary extra wins.
ValidatedGame planted_perfect_game(std::uint64_t seed, std::vector<int>* alice_bits = nullptr,
                                   std::vector<int>* bob_bits = nullptr);

// Random exact-rational XOR game on an n_s x n_t question grid.
ValidatedGame random_xor_game(std::uint64_t seed, int n_s, int n_t);

}  // namespace nlg
