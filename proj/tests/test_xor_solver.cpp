#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "nlg/classical.hpp"
#include "nlg/generators.hpp"
#include "nlg/rng.hpp"
#include "nlg/verify.hpp"
#include "nlg/xor_solver.hpp"

using namespace nlg;
using std::numbers::pi;

namespace {

bool throws_code(ErrorCode want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

XorGame constant_game() {
  GameSpec g = GameSpec::blank(2, 2, 2, 2);
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      g.pi.push_back({s, t, ProbValue(Rational(1, 4))});
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) g.set_win(s, t, a, b, true);
    }
  return *validate(g).xor_form;
}

}  // namespace

TEST_CASE("chsh quantum value") {
  const double target = 0.5 + std::sqrt(2.0) / 4.0;  // cos^2(pi/8)
  const XorSolveResult r = quantum_value_xor(*chsh().xor_form);
  CHECK(std::abs(r.value - target) < 1e-9);
  CHECK(r.gap < 1e-8);
  CHECK(r.value <= r.dual_bound + 1e-8);
  CHECK(r.vectors.m == 2);
}

TEST_CASE("odd cycle quantum values") {
  for (int n : {3, 5}) {
    const double target = std::cos(pi / (4 * n)) * std::cos(pi / (4 * n));
    const XorSolveResult r = quantum_value_xor(*odd_cycle(n).xor_form);
    CHECK(std::abs(r.value - target) < 1e-7);
    CHECK(r.gap < 1e-7);
  }
}

TEST_CASE("vanishing cost matrix") {
  const XorGame x = constant_game();
  const XorSolveResult r = quantum_value_xor(x);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-15));  // tau = 1
  CHECK(r.dual_bound == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.gap == doctest::Approx(0.0));
}

TEST_CASE("ascent is monotone across sweeps") {
  XorSolveOptions opts;
  opts.record_trace = true;
  for (int i = 0; i < 10; ++i) {
    const ValidatedGame game = random_xor_game(400 + i, 3, 3);
    opts.seed = 500 + i;
    const XorSolveResult r = quantum_value_xor(*game.xor_form, opts);
    REQUIRE(r.trace.size() >= 2);
    for (std::size_t k = 1; k < r.trace.size(); ++k)
      CHECK(r.trace[k] >= r.trace[k - 1] - 1e-12);
  }
}

TEST_CASE("solver value dominates the classical value") {
  for (int i = 0; i < 25; ++i) {
    const ValidatedGame game = random_xor_game(700 + i, 3, 2);
    const ClassicalResult classical = classical_value_xor(*game.xor_form);
    const XorSolveResult quantum = quantum_value_xor(*game.xor_form);
    CHECK(quantum.value >= classical.value - 1e-10);
    CHECK(quantum.dual_bound >= classical.value - 1e-10);
  }
}

TEST_CASE("dual bound is a true upper bound for arbitrary vectors") {
  const XorGame x = *chsh().xor_form;
  const double omega_q = 0.5 + std::sqrt(2.0) / 4.0;
  auto rng = rng_stream(31, "dual-fuzz");
  for (int i = 0; i < 200; ++i) {
    VectorStrategy vs;
    vs.m = 2;
    for (int s = 0; s < 2; ++s) vs.u.push_back(random_unit_vector(rng, 2));
    for (int t = 0; t < 2; ++t) vs.v.push_back(random_unit_vector(rng, 2));
    CHECK(dual_upper_bound(x, vs) >= omega_q - 1e-8);
  }
}

TEST_CASE("projection argument: full rank matches rank min(nS, nT)") {
  for (int i = 0; i < 5; ++i) {
    const ValidatedGame game = random_xor_game(900 + i, 3, 3);
    XorSolveOptions low, high;
    low.seed = high.seed = 42 + i;
    low.rank = 3;           // min(nS, nT)
    high.rank = 6;          // nS + nT
    const double v_low = quantum_value_xor(*game.xor_form, low).value;
    const double v_high = quantum_value_xor(*game.xor_form, high).value;
    CHECK(std::abs(v_low - v_high) < 1e-9);
  }
}

TEST_CASE("fixed seeds reproduce bit-identical results") {
  XorSolveOptions opts;
  opts.seed = 77;
  const XorSolveResult a = quantum_value_xor(*odd_cycle(5).xor_form, opts);
  const XorSolveResult b = quantum_value_xor(*odd_cycle(5).xor_form, opts);
  CHECK(a.value == b.value);
  CHECK(a.dual_bound == b.dual_bound);
  for (std::size_t s = 0; s < a.vectors.u.size(); ++s)
    CHECK(a.vectors.u[s] == b.vectors.u[s]);
}

TEST_CASE("grid oracle") {
  // CHSH at millirad resolution reaches the known optimum.
  CHECK(quantum_value_bruteforce(*chsh().xor_form, 2, 1e-3) >= 0.853552);

  // Single-question game won by aligning the vectors.
  GameSpec g = GameSpec::blank(1, 1, 2, 2);
  g.pi.push_back({0, 0, ProbValue(Rational(1))});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) g.set_win(0, 0, a, b, (a ^ b) == 0);
  const XorGame x = *validate(g).xor_form;
  CHECK(quantum_value_bruteforce(x, 2, 1e-2) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(quantum_value_bruteforce(x, 1, 1e-2) == doctest::Approx(1.0).epsilon(1e-12));

  // Guards.
  CHECK(throws_code(ErrorCode::TooLarge, [] {
    quantum_value_bruteforce(*odd_cycle(5).xor_form, 2, 1e-2);
  }));
}

TEST_CASE("vector files round-trip") {
  const XorSolveResult r = quantum_value_xor(*chsh().xor_form);
  const std::string text = vectors_to_json(r.vectors);
  const VectorStrategy parsed = parse_vectors(text);
  CHECK(parsed.m == r.vectors.m);
  for (std::size_t s = 0; s < parsed.u.size(); ++s)
    CHECK((parsed.u[s] - r.vectors.u[s]).norm() == 0.0);
  CHECK(throws_code(ErrorCode::SchemaViolation, [] { parse_vectors(R"({"m": 2, "u": []})"); }));
}
