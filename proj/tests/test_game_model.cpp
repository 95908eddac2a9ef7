#include <doctest.h>

#include <cmath>
#include <functional>

#include "nlg/classical.hpp"
#include "nlg/game.hpp"
#include "nlg/generators.hpp"
#include "nlg/rng.hpp"

using namespace nlg;

namespace {

GameSpec chsh_spec() { return chsh().spec; }

bool throws_code(ErrorCode want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1) - Rational(1, 18) == Rational(17, 18));
  CHECK(Rational::parse("17/18") == Rational(17, 18));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
  CHECK(throws_code(ErrorCode::ParseError, [] { Rational::parse("0.5"); }));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-5, 3).abs() == Rational(5, 3));
}

TEST_CASE("validate detects the CHSH xor form") {
  const ValidatedGame game = validate(chsh_spec());
  CHECK(game.is_binary);
  REQUIRE(game.xor_form.has_value());
  CHECK(game.support.size() == 4);
  CHECK(game.all_exact);
  // |D| = 1/4 on every pair: exactly one parity wins and pi = 1/4.
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) CHECK(std::abs(game.xor_form->d(s, t)) == doctest::Approx(0.25));
}

TEST_CASE("validate rejects malformed distributions") {
  GameSpec g = chsh_spec();
  g.pi[0].p = ProbValue(Rational(1, 8));  // sums to 0.875
  CHECK(throws_code(ErrorCode::NonNormalizedDistribution, [&] { validate(g); }));

  GameSpec neg = chsh_spec();
  neg.pi[0].p = ProbValue(Rational(-1, 4));
  CHECK(throws_code(ErrorCode::NegativeProbability, [&] { validate(neg); }));

  GameSpec range = chsh_spec();
  range.pi[0].s = 7;
  CHECK(throws_code(ErrorCode::IndexOutOfRange, [&] { validate(range); }));
}

TEST_CASE("magic square is not an xor game") {
  const ValidatedGame game = magic_square();
  CHECK_FALSE(game.is_binary);  // nA = 8
  CHECK_FALSE(game.xor_form.has_value());
  CHECK(game.n_a() == 8);
}

TEST_CASE("xor detection is sound and complete on binary games") {
  auto rng = rng_stream(7, "xor-detect");
  for (int trial = 0; trial < 50; ++trial) {
    GameSpec g = GameSpec::blank(2, 3, 2, 2);
    const bool make_symmetric = trial % 2 == 0;
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 3; ++t) {
        const int v0 = static_cast<int>(rng() % 2);
        const int v1 = static_cast<int>(rng() % 2);
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) g.set_win(s, t, a, b, (a ^ b) ? v1 : v0);
      }
    if (!make_symmetric) {
      // Break the symmetry at one tuple.
      const int s = static_cast<int>(rng() % 2), t = static_cast<int>(rng() % 3);
      g.set_win(s, t, 0, 0, !g.win(s, t, 0, 0));
    }
    g.pi.push_back({0, 0, ProbValue(Rational(1))});
    const ValidatedGame game = validate(g);
    // Detection matches the exhaustive symmetry property by definition.
    bool symmetric = true;
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 3; ++t)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            if (g.win(s, t, a, b) != g.win(s, t, 1 - a, 1 - b)) symmetric = false;
    CHECK(game.xor_form.has_value() == symmetric);
    if (!make_symmetric) CHECK_FALSE(game.xor_form.has_value());
  }
}

TEST_CASE("trivial value") {
  CHECK(trivial_value(chsh()) == doctest::Approx(0.5).epsilon(1e-15));
  // Odd cycle: each support pair has exactly one winning parity.
  CHECK(trivial_value(odd_cycle(3)) == doctest::Approx(0.5).epsilon(1e-15));

  // V0 = V1 = 1 everywhere: the trivial strategy always wins.
  GameSpec g = GameSpec::blank(1, 1, 2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) g.set_win(0, 0, a, b, true);
  g.pi.push_back({0, 0, ProbValue(Rational(1))});
  CHECK(trivial_value(validate(g)) == 1.0);

  CHECK(throws_code(ErrorCode::NotXorGame, [] { trivial_value(magic_square()); }));
}

TEST_CASE("trivial value equals the mean win probability over random answers") {
  // Monte-Carlo check of tau against independent uniform answer bits.
  const ValidatedGame game = odd_cycle(5);
  auto rng = rng_stream(123, "tau-mc");
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    DeterministicStrategy d;
    for (int s = 0; s < game.n_s(); ++s) d.a.push_back(static_cast<int>(rng() % 2));
    for (int t = 0; t < game.n_t(); ++t) d.b.push_back(static_cast<int>(rng() % 2));
    const double v = evaluate_deterministic(game, d);
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / n;
  const double sigma = std::sqrt(std::max(0.0, sum_sq / n - mean * mean) / n);
  CHECK(std::abs(mean - trivial_value(game)) <= 3.0 * sigma + 1e-12);
}

TEST_CASE("evaluate_deterministic") {
  const ValidatedGame game = chsh();
  DeterministicStrategy zeros{{0, 0}, {0, 0}};
  CHECK(evaluate_deterministic(game, zeros) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(*evaluate_deterministic_exact(game, zeros) == Rational(3, 4));

  const ValidatedGame cycle = odd_cycle(3);
  DeterministicStrategy mod2{{0, 1, 0}, {0, 1, 0}};
  CHECK(*evaluate_deterministic_exact(cycle, mod2) == Rational(5, 6));

  GameSpec all_win = GameSpec::blank(2, 2, 2, 2);
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      all_win.pi.push_back({s, t, ProbValue(Rational(1, 4))});
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) all_win.set_win(s, t, a, b, true);
    }
  CHECK(evaluate_deterministic(validate(all_win), zeros) == 1.0);

  DeterministicStrategy bad{{0, 5}, {0, 0}};
  CHECK(throws_code(ErrorCode::IndexOutOfRange, [&] { evaluate_deterministic(game, bad); }));
}

TEST_CASE("evaluate_deterministic stays in [0, 1] on random games and strategies") {
  auto rng = rng_stream(99, "eval-range");
  for (int trial = 0; trial < 200; ++trial) {
    const int n_s = 1 + static_cast<int>(rng() % 3);
    const int n_t = 1 + static_cast<int>(rng() % 3);
    const int n_a = 1 + static_cast<int>(rng() % 3);
    const int n_b = 1 + static_cast<int>(rng() % 3);
    GameSpec g = GameSpec::blank(n_s, n_t, n_a, n_b);
    for (std::size_t i = 0; i < g.wins.size(); ++i) g.wins[i] = rng() % 2;
    const std::int64_t denom = n_s * n_t;
    for (int s = 0; s < n_s; ++s)
      for (int t = 0; t < n_t; ++t) g.pi.push_back({s, t, ProbValue(Rational(1, denom))});
    const ValidatedGame game = validate(g);
    DeterministicStrategy d;
    for (int s = 0; s < n_s; ++s) d.a.push_back(static_cast<int>(rng() % n_a));
    for (int t = 0; t < n_t; ++t) d.b.push_back(static_cast<int>(rng() % n_b));
    const double v = evaluate_deterministic(game, d);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("game files round-trip bit-exactly") {
  const GameSpec original = chsh_spec();
  const std::string text = game_to_json(original);
  const GameSpec parsed = parse_game(text);
  CHECK(parsed == original);
  const ValidatedGame a = validate(original), b = validate(parsed);
  CHECK(a.xor_form.has_value() == b.xor_form.has_value());
  CHECK(a.support.size() == b.support.size());

  // Round-trip through an actual file.
  const std::string path = "roundtrip_chsh.json";
  save_game(original, path);
  CHECK(load_game(path) == original);
}

TEST_CASE("game files accept the xor predicate form") {
  const std::string text = R"({
    "nS": 2, "nT": 2, "nA": 2, "nB": 2,
    "pi": [[0,0,"1/4"],[0,1,"1/4"],[1,0,"1/4"],[1,1,"1/4"]],
    "predicate": {"type": "xor",
                  "V0": [[0,0],[0,1],[1,0]],
                  "V1": [[1,1]]}
  })";
  const GameSpec parsed = parse_game(text);
  CHECK(parsed == chsh_spec());
}

TEST_CASE("game file schema errors") {
  CHECK(throws_code(ErrorCode::ParseError, [] { parse_game("{nope"); }));
  CHECK(throws_code(ErrorCode::SchemaViolation, [] {
    parse_game(R"({"nS":1,"nT":1,"nA":2,"nB":2,"pi":[[0,0,1]]})");  // missing predicate
  }));
  CHECK(throws_code(ErrorCode::NegativeProbability, [] {
    parse_game(R"({"nS":1,"nT":1,"nA":2,"nB":2,"pi":[[0,0,-0.1]],
                   "predicate":{"type":"table","wins":[]}})");
  }));
  CHECK(throws_code(ErrorCode::IndexOutOfRange, [] {
    parse_game(R"({"nS":1,"nT":1,"nA":2,"nB":2,"pi":[[0,4,1]],
                   "predicate":{"type":"table","wins":[]}})");
  }));
  CHECK(throws_code(ErrorCode::SchemaViolation, [] {
    parse_game(R"({"nS":1,"nT":1,"nA":3,"nB":2,"pi":[[0,0,1]],
                   "predicate":{"type":"xor","V0":[],"V1":[]}})");  // xor needs nA = nB = 2
  }));
  // Float probabilities are accepted and stay inexact.
  const GameSpec g = parse_game(R"({"nS":1,"nT":1,"nA":2,"nB":2,"pi":[[0,0,1.0]],
                                    "predicate":{"type":"table","wins":[[0,0,0,0]]}})");
  CHECK_FALSE(g.pi[0].p.exact);
}
