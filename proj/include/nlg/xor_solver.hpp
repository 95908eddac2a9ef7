#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "nlg/game.hpp"

namespace nlg {

// Real unit vectors realizing XOR-game correlations <u_s | v_t>.
struct VectorStrategy {
  int m = 0;  // ambient dimension
  std::vector<Eigen::VectorXd> u;
  std::vector<Eigen::VectorXd> v;

  void check() const;  // unit norms within 1e-10
};

struct XorSolveOptions {
  std::uint64_t seed = 1;
  int restarts = 32;
  int rank = 0;          // 0 -> min(nS, nT)
  int max_sweeps = 20000;
  double sweep_tol = 1e-15;  // drive vectors to machine precision for a tight dual
  bool record_trace = false;  // keep per-sweep objectives of the best restart
};

struct XorSolveResult {
  double value = 0.0;       // tau + excess/2 of the best vectors found
  VectorStrategy vectors;
  double dual_bound = 0.0;  // certified upper bound on omega_q
  double gap = 0.0;         // dual_bound - value
  int restarts = 0;
  std::uint64_t iterations = 0;  // total sweeps across restarts
  std::vector<double> trace;     // objective per sweep (best restart)
};

// omega_q for an XOR game by block-coordinate ascent on the unit vectors at
// full rank, with a verified dual certificate. Always returns; the gap
// reports certification quality.
XorSolveResult quantum_value_xor(const XorGame& x, const XorSolveOptions& opts = {});

// Certified upper bound on omega_q from candidate dual multipliers built out
// of any vector strategy; PSD-checked by eigenvalue, shifted if needed.
double dual_upper_bound(const XorGame& x, const VectorStrategy& vs);

// Independent oracle: grid search over unit-circle angles (rank 2) or sign
// vectors (rank 1) with local polish. Small games only.
double quantum_value_bruteforce(const XorGame& x, int rank, double grid);

// Vector file format: {"m": dimension, "u": [[...],...], "v": [[...],...]}.
VectorStrategy parse_vectors(const std::string& json_text);
VectorStrategy load_vectors(const std::string& path);
std::string vectors_to_json(const VectorStrategy& vs);
void save_vectors(const VectorStrategy& vs, const std::string& path);

}  // namespace nlg
