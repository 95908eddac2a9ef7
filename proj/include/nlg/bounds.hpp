#pragma once

#include <cstdint>
#include <optional>

#include "nlg/classical.hpp"
#include "nlg/game.hpp"
#include "nlg/xor_solver.hpp"

namespace nlg {

// Grothendieck constant bracket; the exact value is unknown.
inline constexpr double kGrothendieckLower = 1.6769;
double grothendieck_upper();  // pi / (2 ln(1 + sqrt(2))) ~ 1.7822

struct GammaConstants {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double residual = 0.0;  // root-equation residual at gamma2
};

// Tangency constants of the concave envelope: (pi/2) sin(pi g2) =
// sin^2((pi/2) g2) / g2 = g1. Bisection, cached.
const GammaConstants& gamma_constants();

// Minimal concave upper bound of sin^2((pi/2) x) on [0, 1]:
// gamma1 * x below gamma2, sin^2((pi/2) x) above.
double g_function(double x);

// Exact expected classical value of hyperplane rounding applied to the
// vectors: disagreement probability per pair is theta_st / pi.
double rounding_expectation(const XorGame& x, const VectorStrategy& vs);

struct RoundingSample {
  DeterministicStrategy strategy;  // best sampled strategy
  double best_value = 0.0;
  std::optional<Rational> best_value_exact;
  double empirical_mean = 0.0;  // mean of per-sample strategy values
  double empirical_std = 0.0;   // sample standard deviation of those values
};

RoundingSample sample_rounding(const XorGame& x, const VectorStrategy& vs, std::uint64_t seed,
                               int samples);

struct BoundsReport {
  double tau = 0.0;
  double omega_c = 0.0;
  std::optional<Rational> omega_c_exact;
  double omega_q_value = 0.0;  // primal solver value (lower estimate)
  double omega_q_dual = 0.0;   // certified upper bound
  double g_bound = 0.0;        // g(omega_c)
  double kg_lower_rhs = 0.0;   // tau + 1.6769 (omega_c - tau)
  double kg_upper_rhs = 0.0;   // tau + K_G^up (omega_c - tau)
  double rounded_value = 0.0;  // hyperplane-rounding expectation of the solver vectors

  // Verdicts are derived, never stored.
  bool g_bound_ok() const { return omega_q_dual <= g_bound + 1e-8; }
  bool grothendieck_ok() const { return omega_q_dual - tau <= kg_upper_rhs - tau + 1e-8; }
  bool pass() const { return g_bound_ok() && grothendieck_ok(); }
};

BoundsReport check_bounds(const ValidatedGame& game, const XorSolveOptions& opts = {},
                          std::uint64_t cap = kDefaultWorkCap);

}  // namespace nlg
