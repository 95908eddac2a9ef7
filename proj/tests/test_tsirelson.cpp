#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "nlg/generators.hpp"
#include "nlg/quantum.hpp"
#include "nlg/rng.hpp"
#include "nlg/tsirelson.hpp"
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

}  // namespace

TEST_CASE("clifford generators square to identity and anticommute") {
  for (int m : {1, 2, 3, 5, 8}) {
    const CliffordFamily& fam = clifford_generators(m);
    CHECK(fam.qubits == (m + 1) / 2);
    const Eigen::Index dim = Eigen::Index(1) << fam.qubits;
    REQUIRE(static_cast<int>(fam.generators.size()) == m);
    for (int i = 0; i < m; ++i) {
      CHECK(is_hermitian(fam.generators[i], 1e-13));
      CHECK((fam.generators[i] * fam.generators[i] - Mat::Identity(dim, dim)).norm() < 1e-12);
      for (int j = i + 1; j < m; ++j)
        CHECK((fam.generators[i] * fam.generators[j] + fam.generators[j] * fam.generators[i]).norm() <
              1e-12);
    }
  }
  CHECK((clifford_generators(1).generators[0] - pauli_x()).norm() < 1e-15);
  CHECK((clifford_generators(2).generators[1] - pauli_y()).norm() < 1e-15);
  CHECK(clifford_generators(3).generators[0].rows() == 4);
  CHECK(throws_code(ErrorCode::TooLarge, [] { clifford_generators(21); }));
}

TEST_CASE("vectors_to_strategy realizes the inner products") {
  // u = v = e1 in R^1: A = B = sigma_x, correlation 1.
  VectorStrategy unit;
  unit.m = 1;
  unit.u = {Eigen::VectorXd::Ones(1)};
  unit.v = {Eigen::VectorXd::Ones(1)};
  const ObservableStrategy o = vectors_to_strategy(unit);
  CHECK((o.alice[0] - pauli_x()).norm() < 1e-15);
  CHECK(correlation(o.psi, o.alice[0], o.bob[0]) == doctest::Approx(1.0).epsilon(1e-12));

  // Orthogonal vectors decorrelate exactly.
  VectorStrategy orth;
  orth.m = 2;
  orth.u = {Eigen::Vector2d(1, 0)};
  orth.v = {Eigen::Vector2d(0, 1)};
  const ObservableStrategy o2 = vectors_to_strategy(orth);
  CHECK(std::abs(correlation(o2.psi, o2.alice[0], o2.bob[0])) < 1e-12);
}

TEST_CASE("random families: correlation equals the inner product") {
  auto rng = rng_stream(101, "v2s-fuzz");
  for (int trial = 0; trial < 100; ++trial) {
    VectorStrategy vs;
    vs.m = 1 + static_cast<int>(rng() % 8);
    const int n_s = 1 + static_cast<int>(rng() % 3);
    const int n_t = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < n_s; ++s) vs.u.push_back(random_unit_vector(rng, vs.m));
    for (int t = 0; t < n_t; ++t) vs.v.push_back(random_unit_vector(rng, vs.m));
    const ObservableStrategy o = vectors_to_strategy(vs);
    for (int s = 0; s < n_s; ++s)
      for (int t = 0; t < n_t; ++t)
        CHECK(std::abs(correlation(o.psi, o.alice[s], o.bob[t]) - vs.u[s].dot(vs.v[t])) < 1e-9);
  }
}

TEST_CASE("strategy_to_vectors inverts the correlation table") {
  // Identity observables pair to inner product 1.
  ObservableStrategy ident;
  ident.dim_a = ident.dim_b = 2;
  ident.psi = maximally_entangled(2);
  ident.alice = {Mat::Identity(2, 2)};
  ident.bob = {Mat::Identity(2, 2)};
  const VectorStrategy vs = strategy_to_vectors(ident);
  CHECK(vs.m == 8);  // 2 * dimA * dimB
  CHECK(vs.u[0].dot(vs.v[0]) == doctest::Approx(1.0).epsilon(1e-12));

  // CHSH built-in observables give the +-sqrt(2)/2 correlation pattern.
  const ObservableStrategy o = to_observable_strategy(builtin_chsh());
  const VectorStrategy chsh_vs = strategy_to_vectors(o);
  const double c = std::sqrt(2.0) / 2.0;
  const double expected[2][2] = {{c, c}, {c, -c}};
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      CHECK(chsh_vs.u[s].dot(chsh_vs.v[t]) == doctest::Approx(expected[s][t]).epsilon(1e-10));
}

TEST_CASE("round trip preserves correlations both ways") {
  auto rng = rng_stream(202, "roundtrip");
  for (int trial = 0; trial < 25; ++trial) {
    VectorStrategy vs;
    vs.m = 1 + static_cast<int>(rng() % 6);
    const int n_s = 1 + static_cast<int>(rng() % 2);
    const int n_t = 1 + static_cast<int>(rng() % 2);
    for (int s = 0; s < n_s; ++s) vs.u.push_back(random_unit_vector(rng, vs.m));
    for (int t = 0; t < n_t; ++t) vs.v.push_back(random_unit_vector(rng, vs.m));
    const VectorStrategy back = strategy_to_vectors(vectors_to_strategy(vs));
    for (int s = 0; s < n_s; ++s)
      for (int t = 0; t < n_t; ++t)
        CHECK(std::abs(back.u[s].dot(back.v[t]) - vs.u[s].dot(vs.v[t])) < 1e-9);
  }
}

TEST_CASE("chsh vectors lift to a strategy winning cos^2(pi/8)") {
  const XorSolveResult solved = quantum_value_xor(*chsh().xor_form);
  const ObservableStrategy o = vectors_to_strategy(solved.vectors);
  const double w = win_probability(chsh(), to_measurement_strategy(o));
  CHECK(std::abs(w - (0.5 + std::sqrt(2.0) / 4.0)) < 1e-9);
  // Full pipeline consistency: simulator value equals tau + excess/2.
  CHECK(std::abs(w - solved.value) < 1e-9);
}

TEST_CASE("jl dimension bound") {
  // K is even and at least the lemma bound.
  for (double eps : {0.01, 0.05, 0.099}) {
    for (int points : {3, 5, 11}) {
      const int k = jl_dimension(points, eps);
      CHECK(k % 2 == 0);
      CHECK(k >= 4.0 / (eps * eps / 2.0 - eps * eps * eps / 3.0) * std::log(points));
    }
  }
}

TEST_CASE("jl_reduce identity path") {
  const XorSolveResult solved = quantum_value_xor(*chsh().xor_form);
  const JlReduction red = jl_reduce(solved.vectors, 0.05, 9);
  CHECK(red.identity);
  CHECK(red.worst_pair_distortion == 0.0);
  CHECK(red.vectors.m == solved.vectors.m);
}

TEST_CASE("jl_reduce epsilon domain") {
  const XorSolveResult solved = quantum_value_xor(*chsh().xor_form);
  CHECK(throws_code(ErrorCode::EpsilonOutOfRange, [&] { jl_reduce(solved.vectors, 0.2, 1); }));
  CHECK(throws_code(ErrorCode::EpsilonOutOfRange, [&] { jl_reduce(solved.vectors, 0.0, 1); }));
  CHECK(throws_code(ErrorCode::EpsilonOutOfRange, [&] { jl_reduce(solved.vectors, 0.1, 1); }));
}

TEST_CASE("jl_reduce genuinely projects high-dimensional vectors") {
  // Two questions in dimension 2000 force a real random projection: K for
  // three points at eps = 0.099 is around 1000.
  auto rng = rng_stream(77, "jl-highdim");
  VectorStrategy vs;
  vs.m = 2000;
  vs.u = {random_unit_vector(rng, vs.m)};
  vs.v = {random_unit_vector(rng, vs.m)};
  const double eps = 0.099;
  const JlReduction red = jl_reduce(vs, eps, 5);
  CHECK_FALSE(red.identity);
  CHECK(red.vectors.m == red.k);
  CHECK(red.k < vs.m);
  CHECK(red.draws >= 1);
  // Lemma bounds held for all pairs including the origin, and the inner
  // product moved by less than 2 eps.
  CHECK(red.worst_pair_distortion <= eps);
  CHECK(red.worst_inner_shift < 2 * eps);
  CHECK(std::abs(red.vectors.u[0].dot(red.vectors.v[0]) - vs.u[0].dot(vs.v[0])) < 2 * eps);
  // Unit renormalization.
  CHECK(red.vectors.u[0].norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("entanglement report") {
  const EntanglementReport chsh_rep = entanglement_report(*chsh().xor_form);
  CHECK(chsh_rep.m == 2);
  CHECK(chsh_rep.optimal_qubits == 1);

  const EntanglementReport oc5 = entanglement_report(*odd_cycle(5).xor_form);
  CHECK(oc5.m == 5);
  CHECK(oc5.optimal_qubits == 3);

  for (const auto& row : oc5.rows) {
    CHECK(row.k % 2 == 0);
    CHECK(row.qubits == row.k / 2);
    CHECK(row.k >= 4.0 / (row.epsilon * row.epsilon / 2.0 -
                          row.epsilon * row.epsilon * row.epsilon / 3.0) *
                       std::log(11.0));
  }
}
