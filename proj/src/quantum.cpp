#include "nlg/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace nlg {

namespace {

using std::numbers::pi;

double clamp_probability(double p, double slack) {
  if (p < 0.0 && p > -slack) return 0.0;
  if (p > 1.0 && p < 1.0 + slack) return 1.0;
  return p;
}

Mat projector(const Vec& v) { return v * v.adjoint(); }

Vec qubit_state(double theta, int a) {
  Vec v(2);
  if (a == 0)
    v << std::cos(theta), std::sin(theta);
  else
    v << -std::sin(theta), std::cos(theta);
  return v;
}

Vec epr_pair() {
  Vec psi(4);
  psi << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  return psi;
}

void check_family(const std::vector<Mat>& family, int dim, int outcomes, const char* who, int q) {
  const QuantumTolerances& tol = quantum_tolerances();
  if (static_cast<int>(family.size()) != outcomes)
    fail(ErrorCode::DimensionMismatch, std::string(who) + " measurement " + std::to_string(q) +
                                           " has " + std::to_string(family.size()) +
                                           " outcomes, expected " + std::to_string(outcomes));
  Mat sum = Mat::Zero(dim, dim);
  for (std::size_t a = 0; a < family.size(); ++a) {
    const Mat& op = family[a];
    if (op.rows() != dim || op.cols() != dim)
      fail(ErrorCode::DimensionMismatch, std::string(who) + " operator has wrong dimension");
    const double herm = hermiticity_residual(op);
    if (herm > tol.measurement)
      fail(ErrorCode::InvalidMeasurement,
           std::string(who) + " " + std::to_string(q) + " outcome " + std::to_string(a) +
               " is not Hermitian (residual " + std::to_string(herm) + ")");
    const double lo = min_eigenvalue(op);
    if (lo < -tol.measurement)
      fail(ErrorCode::InvalidMeasurement,
           std::string(who) + " " + std::to_string(q) + " outcome " + std::to_string(a) +
               " is not PSD (min eigenvalue " + std::to_string(lo) + ")");
    sum += op;
  }
  const double dev = (sum - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (dev > tol.measurement)
    fail(ErrorCode::InvalidMeasurement, std::string(who) + " " + std::to_string(q) +
                                            " outcomes do not sum to identity (max deviation " +
                                            std::to_string(dev) + ")");
}

}  // namespace

QuantumTolerances& quantum_tolerances() {
  static QuantumTolerances tol;
  return tol;
}

void check_quantum_strategy(const ValidatedGame& game, const QuantumStrategy& q) {
  const QuantumTolerances& tol = quantum_tolerances();
  if (q.dim_a < 1 || q.dim_b < 1 || q.psi.size() != static_cast<Eigen::Index>(q.dim_a) * q.dim_b)
    fail(ErrorCode::DimensionMismatch, "state length does not match dim_a * dim_b");
  if (static_cast<int>(q.alice.size()) != game.n_s() ||
      static_cast<int>(q.bob.size()) != game.n_t())
    fail(ErrorCode::DimensionMismatch, "measurement counts do not match question counts");
  if (std::abs(q.psi.norm() - 1.0) > tol.state_norm)
    fail(ErrorCode::InvalidMeasurement,
         "state is not normalized (norm " + std::to_string(q.psi.norm()) + ")");
  for (int s = 0; s < game.n_s(); ++s) check_family(q.alice[s], q.dim_a, game.n_a(), "alice", s);
  for (int t = 0; t < game.n_t(); ++t) check_family(q.bob[t], q.dim_b, game.n_b(), "bob", t);
}

SimulationReport simulate(const ValidatedGame& game, const QuantumStrategy& q) {
  check_quantum_strategy(game, q);
  const QuantumTolerances& tol = quantum_tolerances();
  SimulationReport report;
  double total = 0.0;
  for (const SupportEntry& e : game.support) {
    double win = 0.0;
    for (int a = 0; a < game.n_a(); ++a) {
      const Vec left = apply_left(q.alice[e.s][a], q.psi, q.dim_b);
      for (int b = 0; b < game.n_b(); ++b) {
        if (!game.win(e.s, e.t, a, b)) continue;
        const Complex amp = apply_right(q.bob[e.t][b], left, q.dim_a).dot(q.psi);
        // dot() conjugates its argument, giving <psi|(X(x)Y)psi> conjugated;
        // the value is real for valid measurements either way.
        win += std::conj(amp).real();
      }
    }
    win = clamp_probability(win, tol.boundary_clamp);
    report.per_pair.push_back({e.s, e.t, e.p.value(), win});
    total += e.p.value() * win;
  }
  report.win_probability = clamp_probability(total, tol.boundary_clamp);
  return report;
}

double win_probability(const ValidatedGame& game, const QuantumStrategy& q) {
  return simulate(game, q).win_probability;
}

double correlation(const Vec& psi, const Mat& a, const Mat& b) {
  const QuantumTolerances& tol = quantum_tolerances();
  if (!is_hermitian(a, tol.measurement) || !is_hermitian(b, tol.measurement))
    fail(ErrorCode::NonHermitian, "correlation requires Hermitian observables");
  const Complex v = bipartite_expectation(psi, a, b);
  if (std::abs(v.imag()) > tol.imaginary)
    fail(ErrorCode::NonHermitian,
         "correlation has imaginary residual " + std::to_string(v.imag()));
  return v.real();
}

void check_observable_strategy(const ObservableStrategy& o) {
  const QuantumTolerances& tol = quantum_tolerances();
  if (o.dim_a < 1 || o.dim_b < 1 || o.psi.size() != static_cast<Eigen::Index>(o.dim_a) * o.dim_b)
    fail(ErrorCode::DimensionMismatch, "state length does not match dim_a * dim_b");
  if (std::abs(o.psi.norm() - 1.0) > tol.state_norm)
    fail(ErrorCode::InvalidMeasurement, "state is not normalized");
  auto check_side = [&](const std::vector<Mat>& obs, int dim, const char* who) {
    for (std::size_t i = 0; i < obs.size(); ++i) {
      if (obs[i].rows() != dim || obs[i].cols() != dim)
        fail(ErrorCode::DimensionMismatch, std::string(who) + " observable has wrong dimension");
      if (!is_hermitian(obs[i], tol.measurement))
        fail(ErrorCode::NonHermitian, std::string(who) + " observable " + std::to_string(i) +
                                          " is not Hermitian");
      const double dev = (obs[i] * obs[i] - Mat::Identity(dim, dim)).norm();
      if (dev > tol.observable)
        fail(ErrorCode::InvalidMeasurement, std::string(who) + " observable " + std::to_string(i) +
                                                " does not square to identity (deviation " +
                                                std::to_string(dev) + ")");
    }
  };
  check_side(o.alice, o.dim_a, "alice");
  check_side(o.bob, o.dim_b, "bob");
}

QuantumStrategy to_measurement_strategy(const ObservableStrategy& o) {
  check_observable_strategy(o);
  QuantumStrategy q;
  q.dim_a = o.dim_a;
  q.dim_b = o.dim_b;
  q.psi = o.psi;
  const Mat ia = Mat::Identity(o.dim_a, o.dim_a);
  const Mat ib = Mat::Identity(o.dim_b, o.dim_b);
  for (const Mat& a : o.alice) q.alice.push_back({(ia + a) / 2.0, (ia - a) / 2.0});
  for (const Mat& b : o.bob) q.bob.push_back({(ib + b) / 2.0, (ib - b) / 2.0});
  return q;
}

ObservableStrategy to_observable_strategy(const QuantumStrategy& q) {
  ObservableStrategy o;
  o.dim_a = q.dim_a;
  o.dim_b = q.dim_b;
  o.psi = q.psi;
  for (const auto& fam : q.alice) {
    if (fam.size() != 2) fail(ErrorCode::NotBinaryGame, "observable form needs 2-outcome measurements");
    o.alice.push_back(fam[0] - fam[1]);
  }
  for (const auto& fam : q.bob) {
    if (fam.size() != 2) fail(ErrorCode::NotBinaryGame, "observable form needs 2-outcome measurements");
    o.bob.push_back(fam[0] - fam[1]);
  }
  return o;
}

// ---------------------------------------------------------------------------
// Built-in strategies
// ---------------------------------------------------------------------------

QuantumStrategy builtin_chsh() {
  QuantumStrategy q;
  q.dim_a = q.dim_b = 2;
  q.psi = epr_pair();
  const double angles_a[2] = {0.0, pi / 4.0};
  const double angles_b[2] = {pi / 8.0, -pi / 8.0};
  for (double theta : angles_a)
    q.alice.push_back({projector(qubit_state(theta, 0)), projector(qubit_state(theta, 1))});
  for (double theta : angles_b)
    q.bob.push_back({projector(qubit_state(theta, 0)), projector(qubit_state(theta, 1))});
  return q;
}

QuantumStrategy builtin_odd_cycle(int n) {
  if (n < 3 || n % 2 == 0)
    fail(ErrorCode::EvenOrSmallN, "odd cycle needs odd n >= 3, got " + std::to_string(n));
  QuantumStrategy q;
  q.dim_a = q.dim_b = 2;
  q.psi = epr_pair();
  // Basis angles step by -(pi/2 - pi/2n) per vertex with Alice offset pi/4n:
  // both same-vertex and adjacent-vertex questions are then answered
  // correctly with probability cos^2(pi/4n).
  const double step = -(pi / 2.0 - pi / (2.0 * n));
  for (int s = 0; s < n; ++s) {
    const double alpha = step * s + pi / (4.0 * n);
    q.alice.push_back({projector(qubit_state(alpha, 0)), projector(qubit_state(alpha, 1))});
  }
  for (int t = 0; t < n; ++t) {
    const double beta = step * t;
    q.bob.push_back({projector(qubit_state(beta, 0)), projector(qubit_state(beta, 1))});
  }
  return q;
}

Mat magic_square_observable(int cell) {
  static const std::array<Mat, 9> square = [] {
    const Mat sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
    return std::array<Mat, 9>{
        kron(sx, sy), kron(sy, sx), kron(sz, sz),
        kron(sy, sz), kron(sz, sy), kron(sx, sx),
        kron(sz, sx), kron(sx, sz), kron(sy, sy),
    };
  }();
  if (cell < 0 || cell > 8) fail(ErrorCode::IndexOutOfRange, "cell must be in 0..8");
  return square[cell];
}

namespace {

// Joint measurement family of three commuting +-1 observables: the projector
// for outcome bits (o0, o1, o2) is prod_k (1 + (-1)^{o_k} O_k) / 2.
std::vector<Mat> commuting_family(const std::array<Mat, 3>& obs) {
  const Eigen::Index d = obs[0].rows();
  std::vector<Mat> family;
  for (int a = 0; a < 8; ++a) {
    Mat p = Mat::Identity(d, d);
    for (int k = 0; k < 3; ++k) {
      const double sign = ((a >> k) & 1) ? -1.0 : 1.0;
      p = p * ((Mat::Identity(d, d) + sign * obs[k]) / 2.0);
    }
    family.push_back((p + p.adjoint()) / 2.0);  // commuting product; symmetrize roundoff
  }
  return family;
}

Vec two_singlets() {
  Vec singlet(4);
  singlet << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
  // Alice holds qubits (a1, a2), Bob (b1, b2); pair i is a singlet across
  // (a_i, b_i). In Alice-major ordering this is the matrix kron(M, M) with
  // M the 2x2 singlet amplitude matrix.
  Mat m(2, 2);
  m << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
  Mat full = kron(m, m);
  Vec psi(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) psi[i * 4 + j] = full(i, j);
  return psi;
}

std::vector<std::vector<Mat>> magic_square_alice_measurements() {
  std::vector<std::vector<Mat>> alice;
  for (int s = 0; s < 6; ++s) {
    const auto cells = magic_square_triple_cells(s);
    alice.push_back(commuting_family(
        {magic_square_observable(cells[0]), magic_square_observable(cells[1]),
         magic_square_observable(cells[2])}));
  }
  return alice;
}

std::vector<std::vector<Mat>> magic_square_bob_measurements() {
  std::vector<std::vector<Mat>> bob;
  const Mat id = Mat::Identity(4, 4);
  for (int t = 0; t < 9; ++t) {
    const Mat obs = magic_square_observable(t);
    bob.push_back({(id + obs) / 2.0, (id - obs) / 2.0});
  }
  return bob;
}

}  // namespace

QuantumStrategy builtin_magic_square() {
  QuantumStrategy q;
  q.dim_a = q.dim_b = 4;
  q.psi = two_singlets();
  q.alice = magic_square_alice_measurements();
  q.bob = magic_square_bob_measurements();
  return q;
}

QuantumStrategy builtin_ks(const KsVectorSet& ks) {
  ks.check();
  QuantumStrategy q;
  q.dim_a = q.dim_b = 3;
  q.psi = maximally_entangled(3);
  for (const auto& tr : ks.triples) {
    std::vector<Mat> fam;
    for (int k = 0; k < 3; ++k) {
      Vec v(3);
      v << ks.vectors[tr[k]][0], ks.vectors[tr[k]][1], ks.vectors[tr[k]][2];
      fam.push_back(projector(v));
    }
    q.alice.push_back(fam);
  }
  for (const auto& vec : ks.vectors) {
    Vec v(3);
    v << vec[0], vec[1], vec[2];
    const Mat p = projector(v);
    // Outcome 1 claims color 1 for the vector.
    q.bob.push_back({Mat::Identity(3, 3) - p, p});
  }
  return q;
}

QuantumStrategy builtin_threesat_magic() {
  // The magic square measurements answer the 24-clause formula game: clause
  // block s/4 names a row or column, and the parity of Alice's outcomes
  // satisfies all four clauses of its block.
  QuantumStrategy q;
  q.dim_a = q.dim_b = 4;
  q.psi = two_singlets();
  const auto alice = magic_square_alice_measurements();
  for (int s = 0; s < 24; ++s) q.alice.push_back(alice[s / 4]);
  q.bob = magic_square_bob_measurements();
  return q;
}

// ---------------------------------------------------------------------------
// Projective rounding (optimality of projective measurements)
// ---------------------------------------------------------------------------

namespace {

// Coefficient of the eigenvalue lambda_{q, j} in the affine win probability,
// for the side being rounded. Positive coefficient -> eigenvalue 1.
double rounding_coefficient(const ValidatedGame& game, const QuantumStrategy& q, bool alice_side,
                            int question, const Mat& eigvec_projector) {
  double coef = 0.0;
  for (const SupportEntry& e : game.support) {
    if ((alice_side ? e.s : e.t) != question) continue;
    for (int other = 0; other < (alice_side ? game.n_b() : game.n_a()); ++other) {
      const int delta = alice_side
                            ? game.win(e.s, e.t, 0, other) - game.win(e.s, e.t, 1, other)
                            : game.win(e.s, e.t, other, 0) - game.win(e.s, e.t, other, 1);
      if (delta == 0) continue;
      const Mat& partner = alice_side ? q.bob[e.t][other] : q.alice[e.s][other];
      const Complex v = alice_side ? bipartite_expectation(q.psi, eigvec_projector, partner)
                                   : bipartite_expectation(q.psi, partner, eigvec_projector);
      coef += e.p.value() * delta * v.real();
    }
  }
  return coef;
}

std::vector<Mat> round_family(const ValidatedGame& game, const QuantumStrategy& q, bool alice_side,
                              int question) {
  const Mat& op0 = alice_side ? q.alice[question][0] : q.bob[question][0];
  const Eigen::Index dim = op0.rows();
  const Eigensystem eig = jacobi_eigensystem(op0);
  Mat rounded = Mat::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Mat p = eig.vectors.col(j) * eig.vectors.col(j).adjoint();
    const double coef = rounding_coefficient(game, q, alice_side, question, p);
    bool keep;
    if (coef > 1e-12)
      keep = true;
    else if (coef < -1e-12)
      keep = false;
    else
      keep = eig.values[j] >= 0.5;  // objective-indifferent: round to nearest
    if (keep) rounded += p;
  }
  rounded = (rounded + rounded.adjoint()) / 2.0;
  return {rounded, Mat::Identity(dim, dim) - rounded};
}

}  // namespace

QuantumStrategy make_projective(const ValidatedGame& game, const QuantumStrategy& q) {
  if (!game.is_binary) fail(ErrorCode::NotBinaryGame, "projective rounding needs nA = nB = 2");
  check_quantum_strategy(game, q);
  QuantumStrategy out = q;
  for (int s = 0; s < game.n_s(); ++s) out.alice[s] = round_family(game, out, true, s);
  for (int t = 0; t < game.n_t(); ++t) out.bob[t] = round_family(game, out, false, t);
  return out;
}

// ---------------------------------------------------------------------------
// Perfect-strategy extraction for binary games
// ---------------------------------------------------------------------------

namespace {

// Orthonormal basis with phi_1 = psi, completed by Gram-Schmidt over standard
// basis vectors in index order.
std::vector<Vec> basis_from_state(const Vec& psi) {
  const Eigen::Index n = psi.size();
  std::vector<Vec> basis;
  basis.push_back(psi / psi.norm());
  for (Eigen::Index i = 0; i < n && static_cast<Eigen::Index>(basis.size()) < n; ++i) {
    Vec r = Vec::Zero(n);
    r[i] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& b : basis) r -= b.dot(r) * b;
    if (r.norm() < 1e-10) continue;  // near-dependent, skip
    basis.push_back(r / r.norm());
  }
  if (static_cast<Eigen::Index>(basis.size()) != n)
    fail(ErrorCode::NumericallyAmbiguous, "could not complete an orthonormal basis");
  return basis;
}

int kappa(Complex z) {
  const double arg = std::arg(z);  // in (-pi, pi]
  return (arg >= 0.0 && arg < std::numbers::pi) ? +1 : -1;
}

}  // namespace

DeterministicStrategy extract_classical_from_perfect(const ValidatedGame& game,
                                                     const ObservableStrategy& o) {
  if (!game.is_binary) fail(ErrorCode::NotBinaryGame, "extraction needs nA = nB = 2");
  check_observable_strategy(o);
  const QuantumTolerances& tol = quantum_tolerances();

  const double win = win_probability(game, to_measurement_strategy(o));
  if (win < 1.0 - tol.perfect)
    fail(ErrorCode::NotPerfect,
         "strategy wins with probability " + std::to_string(win) + ", not 1");

  const std::vector<Vec> basis = basis_from_state(o.psi);
  auto first_nonzero = [&](const Vec& image, const char* who, int q) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Complex amp = basis[j].dot(image);  // <phi_j | image>
      const double mag = std::abs(amp);
      if (mag > tol.amplitude_nonzero) return std::make_pair(j, amp);
      if (mag >= tol.amplitude_zero)
        fail(ErrorCode::NumericallyAmbiguous,
             std::string(who) + " " + std::to_string(q) + ": amplitude " + std::to_string(mag) +
                 " inside the ambiguous band");
    }
    fail(ErrorCode::NumericallyAmbiguous,
         std::string(who) + " " + std::to_string(q) + ": no usable amplitude found");
  };

  DeterministicStrategy d;
  for (int s = 0; s < game.n_s(); ++s) {
    const Vec image = apply_left(o.alice[s], o.psi, o.dim_b);
    const auto [j, amp] = first_nonzero(image, "alice", s);
    d.a.push_back(kappa(amp) > 0 ? 0 : 1);
  }
  for (int t = 0; t < game.n_t(); ++t) {
    const Vec image = apply_right(o.bob[t], o.psi, o.dim_a);
    const auto [j, amp] = first_nonzero(image, "bob", t);
    d.b.push_back(kappa(amp) > 0 ? 0 : 1);
  }

  // The proof guarantees the extracted answers occur with positive
  // probability, hence win everywhere on the support. Verify.
  if (const auto exact = evaluate_deterministic_exact(game, d)) {
    if (*exact != Rational(1))
      fail(ErrorCode::NumericallyAmbiguous,
           "extracted strategy wins with probability " + exact->str() + ", not 1");
  } else if (evaluate_deterministic(game, d) < 1.0 - 1e-12) {
    fail(ErrorCode::NumericallyAmbiguous, "extracted strategy is not perfect");
  }
  return d;
}

// ---------------------------------------------------------------------------
// Strategy files
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(ErrorCode::SchemaViolation, "complex numbers must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat matrix_from_json(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    fail(ErrorCode::SchemaViolation, "matrix has wrong row count");
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != dim)
      fail(ErrorCode::SchemaViolation, "matrix has wrong column count");
    for (int c = 0; c < dim; ++c) m(i, c) = complex_from_json(j[i][c]);
  }
  return m;
}

}  // namespace

QuantumStrategy parse_strategy(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("dimA") || !j.contains("dimB") || !j.contains("psi") ||
      !j.contains("alice") || !j.contains("bob"))
    fail(ErrorCode::SchemaViolation, "strategy needs dimA, dimB, psi, alice, bob");
  QuantumStrategy q;
  q.dim_a = j["dimA"].get<int>();
  q.dim_b = j["dimB"].get<int>();
  if (q.dim_a < 1 || q.dim_b < 1) fail(ErrorCode::SchemaViolation, "dimensions must be positive");
  const json& psi = j["psi"];
  if (!psi.is_array() || static_cast<int>(psi.size()) != q.dim_a * q.dim_b)
    fail(ErrorCode::SchemaViolation, "psi must have dimA * dimB amplitudes");
  q.psi.resize(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) q.psi[i] = complex_from_json(psi[i]);
  for (const json& fam : j["alice"]) {
    std::vector<Mat> ops;
    for (const json& op : fam) ops.push_back(matrix_from_json(op, q.dim_a));
    q.alice.push_back(std::move(ops));
  }
  for (const json& fam : j["bob"]) {
    std::vector<Mat> ops;
    for (const json& op : fam) ops.push_back(matrix_from_json(op, q.dim_b));
    q.bob.push_back(std::move(ops));
  }
  return q;
}

QuantumStrategy load_strategy(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_strategy(buf.str());
}

std::string strategy_to_json(const QuantumStrategy& q) {
  json j;
  j["dimA"] = q.dim_a;
  j["dimB"] = q.dim_b;
  json psi = json::array();
  for (Eigen::Index i = 0; i < q.psi.size(); ++i) psi.push_back(complex_to_json(q.psi[i]));
  j["psi"] = psi;
  json alice = json::array();
  for (const auto& fam : q.alice) {
    json f = json::array();
    for (const Mat& op : fam) f.push_back(matrix_to_json(op));
    alice.push_back(f);
  }
  j["alice"] = alice;
  json bob = json::array();
  for (const auto& fam : q.bob) {
    json f = json::array();
    for (const Mat& op : fam) f.push_back(matrix_to_json(op));
    bob.push_back(f);
  }
  j["bob"] = bob;
  return j.dump(2);
}

void save_strategy(const QuantumStrategy& q, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  out << strategy_to_json(q) << "\n";
}

}  // namespace nlg
