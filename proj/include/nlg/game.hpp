#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlg/errors.hpp"
#include "nlg/rational.hpp"

namespace nlg {

// Probability (or signed weight) that remembers whether it is exact. Games
// defined by rationals keep exact arithmetic end to end; float inputs fall
// back to binary64.
struct ProbValue {
  bool exact = true;
  Rational r;
  double f = 0.0;

  ProbValue() = default;
  ProbValue(const Rational& v) : exact(true), r(v), f(v.to_double()) {}
  explicit ProbValue(double v) : exact(false), r(), f(v) {}

  double value() const { return exact ? r.to_double() : f; }

  friend ProbValue operator+(const ProbValue& a, const ProbValue& b) {
    if (a.exact && b.exact) return ProbValue(a.r + b.r);
    return ProbValue(a.value() + b.value());
  }
  friend bool operator==(const ProbValue& a, const ProbValue& b) {
    if (a.exact != b.exact) return false;
    return a.exact ? a.r == b.r : a.f == b.f;
  }
};

struct PiEntry {
  int s = 0;
  int t = 0;
  ProbValue p;
};

// Raw game description: question/answer counts, sparse question distribution,
// dense win table. Labels are display metadata only and never serialized.
struct GameSpec {
  int n_s = 0, n_t = 0, n_a = 0, n_b = 0;
  std::vector<PiEntry> pi;
  std::vector<std::uint8_t> wins;  // index ((s*n_t + t)*n_a + a)*n_b + b
  std::vector<std::string> s_labels, t_labels;

  int win(int s, int t, int a, int b) const {
    return wins[(((static_cast<std::size_t>(s) * n_t + t) * n_a + a) * n_b) + b];
  }
  void set_win(int s, int t, int a, int b, bool w) {
    wins[(((static_cast<std::size_t>(s) * n_t + t) * n_a + a) * n_b) + b] = w ? 1 : 0;
  }
  static GameSpec blank(int n_s, int n_t, int n_a, int n_b);
};

bool operator==(const GameSpec& a, const GameSpec& b);

struct DeterministicStrategy {
  std::vector<int> a;  // length n_s, values in [0, n_a)
  std::vector<int> b;  // length n_t, values in [0, n_b)
};

// XOR game in compact form: predicate value for a^b = 0 and 1 on each pair,
// plus the signed cost matrix D = pi * (V0 - V1).
struct XorGame {
  int n_s = 0, n_t = 0;
  std::vector<ProbValue> pi;     // dense n_s * n_t
  std::vector<std::uint8_t> v0;  // win when a ^ b = 0
  std::vector<std::uint8_t> v1;  // win when a ^ b = 1

  std::size_t idx(int s, int t) const { return static_cast<std::size_t>(s) * n_t + t; }
  double d(int s, int t) const {
    return pi[idx(s, t)].value() * (static_cast<int>(v0[idx(s, t)]) - static_cast<int>(v1[idx(s, t)]));
  }
  Rational d_exact(int s, int t) const {
    return pi[idx(s, t)].r * Rational(static_cast<int>(v0[idx(s, t)]) - static_cast<int>(v1[idx(s, t)]));
  }
  bool all_exact() const;
  double tau() const;
  Rational tau_exact() const;  // requires all_exact()
};

struct SupportEntry {
  int s = 0;
  int t = 0;
  ProbValue p;
};

struct ValidatedGame {
  GameSpec spec;                     // pi merged, sorted by (s, t)
  std::vector<SupportEntry> support; // entries with pi > 0
  bool is_binary = false;
  std::optional<XorGame> xor_form;
  bool all_exact = false;

  int n_s() const { return spec.n_s; }
  int n_t() const { return spec.n_t; }
  int n_a() const { return spec.n_a; }
  int n_b() const { return spec.n_b; }
  int win(int s, int t, int a, int b) const { return spec.win(s, t, a, b); }
};

// Checks normalization, ranges and sign of pi, merges duplicate pi entries,
// and detects the XOR form by exhaustive predicate symmetry check.
ValidatedGame validate(const GameSpec& spec);

// tau(G) = (1/2) sum_c sum_{s,t} pi V(c|s,t); XOR games only.
double trivial_value(const ValidatedGame& game);

double evaluate_deterministic(const ValidatedGame& game, const DeterministicStrategy& d);
std::optional<Rational> evaluate_deterministic_exact(const ValidatedGame& game,
                                                     const DeterministicStrategy& d);

// Win probability of (a, b) bit functions on an XOR game.
double evaluate_xor(const XorGame& x, const std::vector<int>& a, const std::vector<int>& b);
std::optional<Rational> evaluate_xor_exact(const XorGame& x, const std::vector<int>& a,
                                           const std::vector<int>& b);

GameSpec load_game(const std::string& path);
GameSpec parse_game(const std::string& json_text);
void save_game(const GameSpec& spec, const std::string& path);
std::string game_to_json(const GameSpec& spec);

}  // namespace nlg
