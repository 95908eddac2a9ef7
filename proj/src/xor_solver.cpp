#include "nlg/xor_solver.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "nlg/linalg.hpp"
#include "nlg/rng.hpp"

namespace nlg {

namespace {

Eigen::MatrixXd cost_matrix(const XorGame& x) {
  Eigen::MatrixXd d(x.n_s, x.n_t);
  for (int s = 0; s < x.n_s; ++s)
    for (int t = 0; t < x.n_t; ++t) d(s, t) = x.d(s, t);
  return d;
}

double objective(const Eigen::MatrixXd& d, const std::vector<Eigen::VectorXd>& u,
                 const std::vector<Eigen::VectorXd>& v) {
  double f = 0.0;
  for (int s = 0; s < d.rows(); ++s)
    for (int t = 0; t < d.cols(); ++t) f += d(s, t) * u[s].dot(v[t]);
  return f;
}

}  // namespace

void VectorStrategy::check() const {
  for (const auto& w : u)
    if (std::abs(w.norm() - 1.0) > 1e-10)
      fail(ErrorCode::InvalidArgument, "u vector is not a unit vector");
  for (const auto& w : v)
    if (std::abs(w.norm() - 1.0) > 1e-10)
      fail(ErrorCode::InvalidArgument, "v vector is not a unit vector");
  for (const auto& w : u)
    if (w.size() != m) fail(ErrorCode::DimensionMismatch, "u vector has wrong dimension");
  for (const auto& w : v)
    if (w.size() != m) fail(ErrorCode::DimensionMismatch, "v vector has wrong dimension");
}

XorSolveResult quantum_value_xor(const XorGame& x, const XorSolveOptions& opts) {
  const Eigen::MatrixXd d = cost_matrix(x);
  const int m = opts.rank > 0 ? opts.rank : std::max(1, std::min(x.n_s, x.n_t));
  const double tau = x.tau();

  XorSolveResult best;
  best.restarts = opts.restarts;
  double best_f = -1.0;  // objective is >= 0 at optimum (orthogonal vectors give 0)
  std::uint64_t sweeps_total = 0;

  for (int restart = 0; restart < opts.restarts; ++restart) {
    auto rng = rng_stream(opts.seed, "xor-solver", static_cast<std::uint64_t>(restart));
    std::vector<Eigen::VectorXd> u(x.n_s), v(x.n_t);
    for (auto& w : u) w = random_unit_vector(rng, m);
    for (auto& w : v) w = random_unit_vector(rng, m);

    std::vector<double> trace;
    double f = objective(d, u, v);
    trace.push_back(f);
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
      ++sweeps_total;
      for (int s = 0; s < x.n_s; ++s) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(m);
        for (int t = 0; t < x.n_t; ++t) w += d(s, t) * v[t];
        const double norm = w.norm();
        if (norm > 1e-14) u[s] = w / norm;  // zero column: keep previous value
      }
      for (int t = 0; t < x.n_t; ++t) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(m);
        for (int s = 0; s < x.n_s; ++s) w += d(s, t) * u[s];
        const double norm = w.norm();
        if (norm > 1e-14) v[t] = w / norm;
      }
      const double f_next = objective(d, u, v);
      if (f_next < f - 1e-9 * std::max(1.0, std::abs(f)))
        fail(ErrorCode::DomainError, "ascent objective decreased; numerical breakdown");
      const double gain = f_next - f;
      f = f_next;
      trace.push_back(f);
      if (gain <= 0.0 || gain < opts.sweep_tol * std::max(1.0, std::abs(f))) break;
    }

    if (f > best_f) {
      best_f = f;
      best.vectors.m = m;
      best.vectors.u = u;
      best.vectors.v = v;
      if (opts.record_trace) best.trace = trace;
    }
  }

  best.iterations = sweeps_total;
  double value = tau + best_f / 2.0;
  if (value > 1.0 && value < 1.0 + 1e-9) value = 1.0;
  if (value < 0.0 && value > -1e-9) value = 0.0;
  best.value = value;
  best.dual_bound = dual_upper_bound(x, best.vectors);
  best.gap = best.dual_bound - best.value;
  return best;
}

double dual_upper_bound(const XorGame& x, const VectorStrategy& vs) {
  vs.check();
  if (static_cast<int>(vs.u.size()) != x.n_s || static_cast<int>(vs.v.size()) != x.n_t)
    fail(ErrorCode::DimensionMismatch, "vector counts do not match the game");
  const Eigen::MatrixXd d = cost_matrix(x);
  const int n_s = x.n_s, n_t = x.n_t;

  // Candidate multipliers from the stationarity conditions of the ascent.
  Eigen::VectorXd lambda(n_s), mu(n_t);
  for (int s = 0; s < n_s; ++s) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(vs.m);
    for (int t = 0; t < n_t; ++t) w += d(s, t) * vs.v[t];
    lambda[s] = w.norm();
  }
  for (int t = 0; t < n_t; ++t) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(vs.m);
    for (int s = 0; s < n_s; ++s) w += d(s, t) * vs.u[s];
    mu[t] = w.norm();
  }

  const double sum_l = lambda.sum(), sum_m = mu.sum();
  if (sum_l <= 0.0 || sum_m <= 0.0) {
    // D vanishes against the vectors on one side; fall back to row/column
    // absolute sums, which always dominate (|<u|v>| <= 1).
    for (int s = 0; s < n_s; ++s) lambda[s] = d.row(s).cwiseAbs().sum();
    for (int t = 0; t < n_t; ++t) mu[t] = d.col(t).cwiseAbs().sum();
  } else {
    // Equalize the two sums; a diagonal congruence, so PSD-ness of the
    // certificate matrix is unchanged while the bound improves.
    const double c = std::sqrt(sum_m / sum_l);
    lambda *= c;
    mu /= c;
  }

  Mat z = Mat::Zero(n_s + n_t, n_s + n_t);
  for (int s = 0; s < n_s; ++s) z(s, s) = lambda[s];
  for (int t = 0; t < n_t; ++t) z(n_s + t, n_s + t) = mu[t];
  for (int s = 0; s < n_s; ++s)
    for (int t = 0; t < n_t; ++t) {
      z(s, n_s + t) = -d(s, t);
      z(n_s + t, s) = -d(s, t);
    }
  const double lo = min_eigenvalue(z);
  const double shift = std::max(0.0, -lo);  // inflate the bound by any PSD violation
  const double bound =
      x.tau() + 0.25 * (lambda.sum() + mu.sum() + shift * (n_s + n_t));
  return bound;
}

// ---------------------------------------------------------------------------
// Grid-search oracle
// ---------------------------------------------------------------------------

namespace {

// Objective for rank-2 vectors: Bob on the unit circle at angles beta, Alice
// best-responding. F(beta) = sum_s || sum_t D(s,t) (cos b_t, sin b_t) ||.
double angle_objective(const Eigen::MatrixXd& d, const std::vector<double>& beta) {
  double f = 0.0;
  for (int s = 0; s < d.rows(); ++s) {
    double cx = 0.0, cy = 0.0;
    for (int t = 0; t < d.cols(); ++t) {
      cx += d(s, t) * std::cos(beta[t]);
      cy += d(s, t) * std::sin(beta[t]);
    }
    f += std::hypot(cx, cy);
  }
  return f;
}

}  // namespace

double quantum_value_bruteforce(const XorGame& x, int rank, double grid) {
  if (x.n_s > 3 || x.n_t > 3 || rank > 2)
    fail(ErrorCode::TooLarge, "oracle limited to nS, nT <= 3 and rank <= 2");
  if (rank < 1 || grid <= 0.0) fail(ErrorCode::InvalidArgument, "need rank >= 1 and grid > 0");
  const Eigen::MatrixXd d = cost_matrix(x);

  if (rank == 1) {
    // Unit vectors in R^1 are signs; exhaust Bob and best-respond.
    double best = 0.0;
    for (int mask = 0; mask < (1 << x.n_t); ++mask) {
      double f = 0.0;
      for (int s = 0; s < x.n_s; ++s) {
        double acc = 0.0;
        for (int t = 0; t < x.n_t; ++t) acc += d(s, t) * (((mask >> t) & 1) ? -1.0 : 1.0);
        f += std::abs(acc);
      }
      best = std::max(best, f);
    }
    return x.tau() + best / 2.0;
  }

  // Rank 2: grid over Bob's angles with the global rotation fixed by
  // beta_0 = 0, then coordinate-descent polish in angle space.
  const int free_angles = x.n_t - 1;
  const int steps = std::max(1, static_cast<int>(std::ceil(2.0 * std::numbers::pi / grid)));
  std::vector<double> beta(x.n_t, 0.0), best_beta(x.n_t, 0.0);
  double best = angle_objective(d, beta);

  std::vector<int> idx(free_angles, 0);
  bool done = free_angles == 0;
  while (!done) {
    for (int i = 0; i < free_angles; ++i) beta[i + 1] = idx[i] * grid;
    const double f = angle_objective(d, beta);
    if (f > best) {
      best = f;
      best_beta = beta;
    }
    int c = 0;
    while (c < free_angles && ++idx[c] >= steps) idx[c++] = 0;
    done = (c == free_angles);
  }

  // Polish: shrink-step coordinate descent over all angles.
  beta = best_beta;
  double step = grid;
  while (step > 1e-10) {
    bool improved = false;
    for (int t = 0; t < x.n_t; ++t) {
      for (double delta : {step, -step}) {
        std::vector<double> cand = beta;
        cand[t] += delta;
        const double f = angle_objective(d, cand);
        if (f > best) {
          best = f;
          beta = cand;
          improved = true;
        }
      }
    }
    if (!improved) step /= 2.0;
  }
  return x.tau() + best / 2.0;
}

// ---------------------------------------------------------------------------
// Vector files
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

std::vector<Eigen::VectorXd> vector_list_from_json(const json& j, int m, const char* field) {
  if (!j.is_array()) fail(ErrorCode::SchemaViolation, std::string("'") + field + "' must be an array");
  std::vector<Eigen::VectorXd> out;
  for (const json& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      fail(ErrorCode::SchemaViolation, std::string(field) + " vectors must have length m");
    Eigen::VectorXd v(m);
    for (int i = 0; i < m; ++i) {
      if (!row[i].is_number()) fail(ErrorCode::SchemaViolation, "vector entries must be numbers");
      v[i] = row[i].get<double>();
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

VectorStrategy parse_vectors(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j.contains("u") || !j.contains("v"))
    fail(ErrorCode::SchemaViolation, "vector file needs m, u, v");
  VectorStrategy vs;
  vs.m = j["m"].get<int>();
  if (vs.m < 1) fail(ErrorCode::SchemaViolation, "m must be positive");
  vs.u = vector_list_from_json(j["u"], vs.m, "u");
  vs.v = vector_list_from_json(j["v"], vs.m, "v");
  vs.check();
  return vs;
}

VectorStrategy load_vectors(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_vectors(buf.str());
}

std::string vectors_to_json(const VectorStrategy& vs) {
  json j;
  j["m"] = vs.m;
  auto dump = [&](const std::vector<Eigen::VectorXd>& list) {
    json rows = json::array();
    for (const auto& v : list) {
      json row = json::array();
      for (int i = 0; i < vs.m; ++i) row.push_back(v[i]);
      rows.push_back(row);
    }
    return rows;
  };
  j["u"] = dump(vs.u);
  j["v"] = dump(vs.v);
  return j.dump(2);
}

void save_vectors(const VectorStrategy& vs, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  out << vectors_to_json(vs) << "\n";
}

}  // namespace nlg
