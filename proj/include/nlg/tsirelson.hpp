#pragma once

#include <cstdint>
#include <vector>

#include "nlg/linalg.hpp"
#include "nlg/quantum.hpp"
#include "nlg/xor_solver.hpp"

namespace nlg {

// Anticommuting Hermitian generators (Weyl-Brauer ladder on ceil(m/2) qubits).
struct CliffordFamily {
  int m = 0;
  int qubits = 0;
  std::vector<Mat> generators;  // dimension 2^qubits, Gamma_i^2 = 1, {Gamma_i, Gamma_j} = 0
};

const CliffordFamily& clifford_generators(int m);  // 1 <= m <= 20

// Unit vectors -> +-1 observables on the maximally entangled state with
// correlation(psi, A_s, B_t) = <u_s | v_t>.
ObservableStrategy vectors_to_strategy(const VectorStrategy& vs);

// +-1 observables -> unit vectors via the real embedding of (A (x) 1)|psi>
// and (1 (x) B)|psi>; output dimension 2 * dim_a * dim_b.
VectorStrategy strategy_to_vectors(const ObservableStrategy& o);

struct JlReduction {
  VectorStrategy vectors;
  int k = 0;                      // even target dimension from the lemma bound
  bool identity = false;          // input already within dimension k
  int draws = 0;                  // projections sampled before success
  double worst_pair_distortion = 0.0;   // max |  ||f(p)-f(q)||^2 / ||p-q||^2 - 1 |
  double worst_inner_shift = 0.0;       // max | <u'|v'> - <u|v> |
};

// Johnson-Lindenstrauss reduction of a vector strategy, made constructive by
// resampling the random map until the distortion bounds hold for every pair
// among {u_s} union {v_t} union {0}. epsilon must lie in (0, 1/10).
JlReduction jl_reduce(const VectorStrategy& vs, double epsilon, std::uint64_t seed);

// Smallest even K with K >= 4 (eps^2/2 - eps^3/3)^{-1} log(points).
int jl_dimension(int points, double epsilon);

struct EntanglementReport {
  int m = 0;              // min(|S|, |T|)
  int optimal_qubits = 0; // ceil(m/2)
  struct Row {
    double epsilon;
    int k;
    int qubits;  // k/2
  };
  std::vector<Row> rows;
};

EntanglementReport entanglement_report(const XorGame& x);

}  // namespace nlg
