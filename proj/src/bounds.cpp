#include "nlg/bounds.hpp"

#include <cmath>
#include <numbers>

#include "nlg/rng.hpp"

namespace nlg {

namespace {

using std::numbers::pi;

double tangency_mismatch(double g) {
  // Zero exactly when (pi/2) sin(pi g) = sin^2((pi/2) g) / g.
  return pi / 2.0 * std::sin(pi * g) * g - std::sin(pi / 2.0 * g) * std::sin(pi / 2.0 * g);
}

}  // namespace

double grothendieck_upper() {
  return pi / (2.0 * std::log(1.0 + std::sqrt(2.0)));
}

const GammaConstants& gamma_constants() {
  static const GammaConstants constants = [] {
    double lo = 0.5, hi = 0.99;
    // tangency_mismatch is positive at 0.5 and negative at 0.99.
    for (int i = 0; i < 200; ++i) {
      const double mid = (lo + hi) / 2.0;
      if (tangency_mismatch(mid) > 0.0)
        lo = mid;
      else
        hi = mid;
    }
    GammaConstants c;
    c.gamma2 = (lo + hi) / 2.0;
    c.gamma1 = pi / 2.0 * std::sin(pi * c.gamma2);
    c.residual = std::abs(tangency_mismatch(c.gamma2));
    return c;
  }();
  return constants;
}

double g_function(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    fail(ErrorCode::DomainError, "g is defined on [0, 1], got " + std::to_string(x));
  const GammaConstants& c = gamma_constants();
  if (x <= c.gamma2) return c.gamma1 * x;
  const double s = std::sin(pi / 2.0 * x);
  return s * s;
}

double rounding_expectation(const XorGame& x, const VectorStrategy& vs) {
  vs.check();
  if (static_cast<int>(vs.u.size()) != x.n_s || static_cast<int>(vs.v.size()) != x.n_t)
    fail(ErrorCode::DimensionMismatch, "vector counts do not match the game");
  double acc = 0.0;
  for (int s = 0; s < x.n_s; ++s)
    for (int t = 0; t < x.n_t; ++t) {
      const auto i = x.idx(s, t);
      const double p = x.pi[i].value();
      if (p == 0.0) continue;
      const double ip = std::clamp(vs.u[s].dot(vs.v[t]), -1.0, 1.0);
      const double disagree = std::acos(ip) / pi;
      acc += p * (x.v1[i] * disagree + x.v0[i] * (1.0 - disagree));
    }
  return acc;
}

RoundingSample sample_rounding(const XorGame& x, const VectorStrategy& vs, std::uint64_t seed,
                               int samples) {
  vs.check();
  if (samples < 1) fail(ErrorCode::InvalidArgument, "need at least one sample");
  if (static_cast<int>(vs.u.size()) != x.n_s || static_cast<int>(vs.v.size()) != x.n_t)
    fail(ErrorCode::DimensionMismatch, "vector counts do not match the game");

  RoundingSample out;
  double sum = 0.0, sum_sq = 0.0;
  double best = -1.0;
  const bool exact = x.all_exact();
  for (int i = 0; i < samples; ++i) {
    auto rng = rng_stream(seed, "hyperplane-rounding", static_cast<std::uint64_t>(i));
    const Eigen::VectorXd lambda = random_unit_vector(rng, vs.m);
    std::vector<int> a(x.n_s), b(x.n_t);
    // sign(x) = +1 when x >= 0, and the answer bit is (1 + sign)/2.
    for (int s = 0; s < x.n_s; ++s) a[s] = lambda.dot(vs.u[s]) >= 0.0 ? 1 : 0;
    for (int t = 0; t < x.n_t; ++t) b[t] = lambda.dot(vs.v[t]) >= 0.0 ? 1 : 0;
    const double value = evaluate_xor(x, a, b);
    sum += value;
    sum_sq += value * value;
    if (value > best) {
      best = value;
      out.strategy.a = a;
      out.strategy.b = b;
      out.best_value = value;
      if (exact) out.best_value_exact = evaluate_xor_exact(x, a, b);
    }
  }
  out.empirical_mean = sum / samples;
  const double var = std::max(0.0, sum_sq / samples - out.empirical_mean * out.empirical_mean);
  out.empirical_std = std::sqrt(var);
  return out;
}

BoundsReport check_bounds(const ValidatedGame& game, const XorSolveOptions& opts,
                          std::uint64_t cap) {
  if (!game.xor_form) fail(ErrorCode::NotXorGame, "bound checks apply to XOR games only");
  const XorGame& x = *game.xor_form;

  BoundsReport rep;
  rep.tau = x.tau();
  const ClassicalResult classical = classical_value_xor(x, cap);
  rep.omega_c = classical.value;
  rep.omega_c_exact = classical.value_exact;

  const XorSolveResult solved = quantum_value_xor(x, opts);
  rep.omega_q_value = solved.value;
  rep.omega_q_dual = solved.dual_bound;

  rep.g_bound = g_function(std::clamp(rep.omega_c, 0.0, 1.0));
  rep.kg_lower_rhs = rep.tau + kGrothendieckLower * (rep.omega_c - rep.tau);
  rep.kg_upper_rhs = rep.tau + grothendieck_upper() * (rep.omega_c - rep.tau);
  rep.rounded_value = rounding_expectation(x, solved.vectors);
  return rep;
}

}  // namespace nlg
