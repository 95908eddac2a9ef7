#pragma once

#include <vector>

#include "nlg/game.hpp"
#include "nlg/generators.hpp"
#include "nlg/linalg.hpp"

namespace nlg {

// Tolerances used by the simulator, overridable for experiments.
struct QuantumTolerances {
  double state_norm = 1e-10;
  double measurement = 1e-10;   // hermiticity / PSD / completeness
  double observable = 1e-9;     // A^2 = identity
  double imaginary = 1e-10;     // residual imaginary parts
  double boundary_clamp = 1e-9; // clamp probabilities this close to [0,1]
  double perfect = 1e-9;        // "wins with probability 1" slack
  double amplitude_zero = 1e-12;
  double amplitude_nonzero = 1e-6;
};

QuantumTolerances& quantum_tolerances();  // process-wide, mutable

// General measurement strategy: shared state plus one measurement family per
// question. psi uses Alice-major ordering (index a*dim_b + b).
struct QuantumStrategy {
  int dim_a = 0, dim_b = 0;
  Vec psi;
  std::vector<std::vector<Mat>> alice;  // [s][a]
  std::vector<std::vector<Mat>> bob;    // [t][b]
};

// Binary strategy in observable form: Hermitian A_s, B_t with spectrum {+-1}.
struct ObservableStrategy {
  int dim_a = 0, dim_b = 0;
  Vec psi;
  std::vector<Mat> alice;
  std::vector<Mat> bob;
};

void check_quantum_strategy(const ValidatedGame& game, const QuantumStrategy& q);
void check_observable_strategy(const ObservableStrategy& o);

double win_probability(const ValidatedGame& game, const QuantumStrategy& q);

struct PairOutcome {
  int s = 0, t = 0;
  double pi = 0.0;
  double win = 0.0;  // conditional success probability given (s, t)
};

struct SimulationReport {
  double win_probability = 0.0;
  std::vector<PairOutcome> per_pair;
};

SimulationReport simulate(const ValidatedGame& game, const QuantumStrategy& q);

// Re<psi| A (x) B |psi>; requires Hermitian A, B and a vanishing imaginary
// residual.
double correlation(const Vec& psi, const Mat& a, const Mat& b);

// Binary conversions with the 0 <-> +1, 1 <-> -1 answer convention.
QuantumStrategy to_measurement_strategy(const ObservableStrategy& o);
ObservableStrategy to_observable_strategy(const QuantumStrategy& q);

QuantumStrategy builtin_chsh();
QuantumStrategy builtin_odd_cycle(int n);
QuantumStrategy builtin_magic_square();
QuantumStrategy builtin_ks(const KsVectorSet& ks);
QuantumStrategy builtin_threesat_magic();

// Rounds every measurement operator of a binary-game strategy to a projector
// without decreasing the winning probability (eigenvalue rounding).
QuantumStrategy make_projective(const ValidatedGame& game, const QuantumStrategy& q);

// Extracts a perfect deterministic strategy from a perfect quantum strategy
// for a binary game.
DeterministicStrategy extract_classical_from_perfect(const ValidatedGame& game,
                                                     const ObservableStrategy& o);

// The 3x3 square of two-qubit observables behind the magic square strategy.
Mat magic_square_observable(int cell);

// Strategy file format: {"dimA", "dimB", "psi": [[re,im],...],
// "alice": [s][a] -> matrix rows of [re,im], "bob": likewise}.
QuantumStrategy parse_strategy(const std::string& json_text);
QuantumStrategy load_strategy(const std::string& path);
std::string strategy_to_json(const QuantumStrategy& q);
void save_strategy(const QuantumStrategy& q, const std::string& path);

}  // namespace nlg
