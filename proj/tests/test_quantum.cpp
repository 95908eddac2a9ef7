#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "nlg/classical.hpp"
#include "nlg/generators.hpp"
#include "nlg/quantum.hpp"
#include "nlg/rng.hpp"
#include "nlg/verify.hpp"

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

Mat random_hermitian(std::mt19937_64& rng, int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(gaussian(rng), gaussian(rng));
  return (m + m.adjoint()) / 2.0;
}

}  // namespace

TEST_CASE("jacobi eigensystem reconstructs random hermitian matrices") {
  auto rng = rng_stream(3, "jacobi");
  for (int n : {1, 2, 3, 5, 8}) {
    const Mat a = random_hermitian(rng, n);
    const Eigensystem eig = jacobi_eigensystem(a);
    // A V = V diag(lambda), V unitary, eigenvalues ascending.
    const Mat lhs = a * eig.vectors;
    const Mat rhs = eig.vectors * eig.values.asDiagonal().toDenseMatrix().cast<Complex>();
    CHECK((lhs - rhs).norm() < 1e-11 * std::max(1.0, a.norm()));
    CHECK((eig.vectors.adjoint() * eig.vectors - Mat::Identity(n, n)).norm() < 1e-12);
    for (int i = 0; i + 1 < n; ++i) CHECK(eig.values[i] <= eig.values[i + 1]);
  }
  // Known spectra.
  CHECK(min_eigenvalue(pauli_z()) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(min_eigenvalue(Mat::Identity(3, 3)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("chsh builtin wins with cos^2(pi/8)") {
  const double expected = std::cos(pi / 8) * std::cos(pi / 8);
  const SimulationReport r = simulate(chsh(), builtin_chsh());
  CHECK(std::abs(r.win_probability - expected) < 1e-10);
  // Constant per-pair success probability.
  for (const auto& p : r.per_pair) CHECK(std::abs(p.win - expected) < 1e-10);
}

TEST_CASE("odd cycle builtin wins with cos^2(pi/4n) on every pair") {
  for (int n : {3, 5, 7}) {
    const double expected = std::cos(pi / (4 * n)) * std::cos(pi / (4 * n));
    const SimulationReport r = simulate(odd_cycle(n), builtin_odd_cycle(n));
    CHECK(std::abs(r.win_probability - expected) < 1e-10);
    for (const auto& p : r.per_pair) CHECK(std::abs(p.win - expected) < 1e-10);
  }
}

TEST_CASE("magic square builtin is perfect") {
  const double w = win_probability(magic_square(), builtin_magic_square());
  CHECK(std::abs(w - 1.0) < 1e-10);
}

TEST_CASE("magic square observables: products, commutation, anticommutation") {
  // Pauli pairs anticommute.
  const Mat sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  CHECK((sx * sy + sy * sx).norm() < 1e-14);
  CHECK((sx * sz + sz * sx).norm() < 1e-14);
  CHECK((sy * sz + sz * sy).norm() < 1e-14);

  const Mat id4 = Mat::Identity(4, 4);
  for (int s = 0; s < 6; ++s) {
    const auto cells = magic_square_triple_cells(s);
    // Observables commute within every row and column.
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const Mat a = magic_square_observable(cells[i]);
        const Mat b = magic_square_observable(cells[j]);
        CHECK((a * b - b * a).norm() < 1e-12);
      }
    const Mat product = magic_square_observable(cells[0]) * magic_square_observable(cells[1]) *
                        magic_square_observable(cells[2]);
    if (s < 3)
      CHECK((product - id4).norm() < 1e-12);  // rows multiply to identity
    else
      CHECK((product + id4).norm() < 1e-12);  // columns multiply to -identity
  }

  // Odd-parity outcomes only, for columns: the even-parity projectors vanish.
  const QuantumStrategy q = builtin_magic_square();
  for (int s = 3; s < 6; ++s)
    for (int a = 0; a < 8; ++a) {
      const int parity = ((a >> 0) ^ (a >> 1) ^ (a >> 2)) & 1;
      if (parity == 0) CHECK(q.alice[s][a].norm() < 1e-12);
    }
}

TEST_CASE("correlation basics") {
  // Singlet: -1 eigenvector of sigma (x) sigma.
  Vec singlet(4);
  singlet << 0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0;
  CHECK(correlation(singlet, pauli_x(), pauli_x()) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(correlation(singlet, pauli_y(), pauli_y()) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(correlation(singlet, pauli_z(), pauli_z()) == doctest::Approx(-1.0).epsilon(1e-12));

  const Vec ent = maximally_entangled(2);
  CHECK(correlation(ent, Mat::Identity(2, 2), Mat::Identity(2, 2)) == doctest::Approx(1.0));
  // <psi|X (x) Y|psi> = Tr(X^T Y)/2: orthogonal Paulis decorrelate.
  CHECK(correlation(ent, pauli_z(), pauli_x()) == doctest::Approx(0.0).epsilon(1e-14));

  Mat skew(2, 2);
  skew << 0, 1, 2, 0;
  CHECK(throws_code(ErrorCode::NonHermitian, [&] { correlation(ent, skew, pauli_x()); }));
}

TEST_CASE("ks builtin is perfect and has complete projector triples") {
  const KsVectorSet& ks = ks_asset();
  const QuantumStrategy q = builtin_ks(ks);
  for (std::size_t s = 0; s < ks.triples.size(); ++s) {
    Mat sum = Mat::Zero(3, 3);
    for (const Mat& op : q.alice[s]) sum += op;
    CHECK((sum - Mat::Identity(3, 3)).norm() < 1e-10);
  }
  const double w = win_probability(kochen_specker(ks), q);
  CHECK(std::abs(w - 1.0) < 1e-10);
}

TEST_CASE("three sat lift is perfect") {
  const double w = win_probability(three_sat(magic_square_formula()), builtin_threesat_magic());
  CHECK(std::abs(w - 1.0) < 1e-10);
}

TEST_CASE("strategy invariant violations are reported") {
  const ValidatedGame game = chsh();
  QuantumStrategy q = builtin_chsh();
  q.psi *= 2.0;
  CHECK(throws_code(ErrorCode::InvalidMeasurement, [&] { win_probability(game, q); }));

  q = builtin_chsh();
  q.alice[0][0] = -q.alice[0][0];  // negative operator
  CHECK(throws_code(ErrorCode::InvalidMeasurement, [&] { win_probability(game, q); }));

  q = builtin_chsh();
  q.alice.pop_back();
  CHECK(throws_code(ErrorCode::DimensionMismatch, [&] { win_probability(game, q); }));
}

TEST_CASE("observable and measurement forms are mutually inverse") {
  auto rng = rng_stream(17, "obs-roundtrip");
  for (int trial = 0; trial < 20; ++trial) {
    // Random +-1 observable from a random projector.
    const int dim = 2 + static_cast<int>(rng() % 3);
    Mat h = random_hermitian(rng, dim);
    const Eigensystem eig = jacobi_eigensystem(h);
    Mat p = Mat::Zero(dim, dim);
    for (int j = 0; j < dim; ++j)
      if (rng() % 2) p += eig.vectors.col(j) * eig.vectors.col(j).adjoint();
    const Mat obs = 2.0 * p - Mat::Identity(dim, dim);

    ObservableStrategy o;
    o.dim_a = o.dim_b = dim;
    o.psi = maximally_entangled(dim);
    o.alice = {obs};
    o.bob = {Mat::Identity(dim, dim)};
    const QuantumStrategy q = to_measurement_strategy(o);
    const ObservableStrategy back = to_observable_strategy(q);
    CHECK((back.alice[0] - obs).norm() < 1e-12);
    CHECK((q.alice[0][0] - p).norm() < 1e-12);
  }
}

TEST_CASE("q(alpha, beta) four-term decomposition matches direct measurement") {
  auto rng = rng_stream(29, "q-decomposition");
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 2;
    Mat h = random_hermitian(rng, dim);
    Eigensystem eig = jacobi_eigensystem(h);
    Mat pa = eig.vectors.col(0) * eig.vectors.col(0).adjoint();
    const Mat a = 2.0 * pa - Mat::Identity(2, 2);
    h = random_hermitian(rng, dim);
    eig = jacobi_eigensystem(h);
    Mat pb = eig.vectors.col(0) * eig.vectors.col(0).adjoint();
    const Mat b = 2.0 * pb - Mat::Identity(2, 2);

    Vec psi(4);
    for (int i = 0; i < 4; ++i) psi[i] = Complex(gaussian(rng), gaussian(rng));
    psi /= psi.norm();

    const double ea = bipartite_expectation(psi, a, Mat::Identity(2, 2)).real();
    const double eb = bipartite_expectation(psi, Mat::Identity(2, 2), b).real();
    const double eab = bipartite_expectation(psi, a, b).real();
    for (int alpha : {+1, -1})
      for (int beta : {+1, -1}) {
        const Mat proj_a = alpha > 0 ? pa : Mat(Mat::Identity(2, 2) - pa);
        const Mat proj_b = beta > 0 ? pb : Mat(Mat::Identity(2, 2) - pb);
        const double direct = bipartite_expectation(psi, proj_a, proj_b).real();
        const double expanded = (1.0 + alpha * ea + beta * eb + alpha * beta * eab) / 4.0;
        CHECK(std::abs(direct - expanded) < 1e-12);
      }
  }
}

TEST_CASE("make_projective fixes non-projective strategies without losing value") {
  const ValidatedGame game = chsh();

  // Fixed point: an already projective strategy is unchanged.
  const QuantumStrategy q = builtin_chsh();
  const QuantumStrategy fixed = make_projective(game, q);
  for (int s = 0; s < 2; ++s)
    for (int a = 0; a < 2; ++a) CHECK((fixed.alice[s][a] - q.alice[s][a]).norm() < 1e-12);
  for (int t = 0; t < 2; ++t)
    for (int b = 0; b < 2; ++b) CHECK((fixed.bob[t][b] - q.bob[t][b]).norm() < 1e-12);

  // Blur one measurement to 0.5 * identity; rounding must recover at least
  // the blurred value and end projective.
  QuantumStrategy blurred = q;
  blurred.alice[0][0] = 0.5 * Mat::Identity(2, 2);
  blurred.alice[0][1] = 0.5 * Mat::Identity(2, 2);
  const double before = win_probability(game, blurred);
  const QuantumStrategy rounded = make_projective(game, blurred);
  const double after = win_probability(game, rounded);
  CHECK(after >= before - 1e-10);
  for (const auto& fam : rounded.alice)
    for (const Mat& op : fam) CHECK((op * op - op).norm() < 1e-10);  // projector
  for (const auto& fam : rounded.bob)
    for (const Mat& op : fam) CHECK((op * op - op).norm() < 1e-10);

  CHECK(throws_code(ErrorCode::NotBinaryGame,
                    [&] { make_projective(magic_square(), builtin_magic_square()); }));
}

TEST_CASE("make_projective rounds psi-irrelevant eigenvalues deterministically") {
  // State supported on |00>, |11>; blur the measurement on an irrelevant
  // subspace via a dummy extra dimension. Build a 2x2 game but dim 3 Alice.
  const ValidatedGame game = chsh();
  QuantumStrategy q = builtin_chsh();
  // Embed Alice in dimension 3 with psi untouched on the first two
  // coordinates; the extra eigenvalue 0.3 is objective-irrelevant.
  QuantumStrategy wide;
  wide.dim_a = 3;
  wide.dim_b = 2;
  wide.psi = Vec::Zero(6);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) wide.psi[a * 2 + b] = q.psi[a * 2 + b];
  for (int s = 0; s < 2; ++s) {
    Mat x0 = Mat::Zero(3, 3), x1 = Mat::Zero(3, 3);
    x0.topLeftCorner(2, 2) = q.alice[s][0];
    x1.topLeftCorner(2, 2) = q.alice[s][1];
    x0(2, 2) = 0.3;  // slack split between the two outcomes
    x1(2, 2) = 0.7;
    wide.alice.push_back({x0, x1});
  }
  wide.bob = q.bob;
  const double before = win_probability(game, wide);
  const QuantumStrategy rounded = make_projective(game, wide);
  CHECK(win_probability(game, rounded) >= before - 1e-10);
  // 0.3 rounds to 0 under the nearest-value tie rule.
  CHECK(std::abs(rounded.alice[0][0](2, 2).real()) < 1e-12);
}

TEST_CASE("extraction on the sigma_z agreement game") {
  GameSpec g = GameSpec::blank(2, 2, 2, 2);
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      g.pi.push_back({s, t, ProbValue(Rational(1, 4))});
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) g.set_win(s, t, a, b, a == b);
    }
  const ValidatedGame game = validate(g);
  ObservableStrategy o;
  o.dim_a = o.dim_b = 2;
  o.psi = maximally_entangled(2);
  o.alice = {pauli_z(), pauli_z()};
  o.bob = {pauli_z(), pauli_z()};
  const DeterministicStrategy d = extract_classical_from_perfect(game, o);
  CHECK(*evaluate_deterministic_exact(game, d) == Rational(1));
  CHECK(d.a[0] == d.a[1]);
  CHECK(d.a[0] == d.b[0]);
}

TEST_CASE("extraction rejects imperfect strategies and non-binary games") {
  // CHSH built-in wins with cos^2(pi/8) < 1.
  const ObservableStrategy o = to_observable_strategy(builtin_chsh());
  CHECK(throws_code(ErrorCode::NotPerfect, [&] { extract_classical_from_perfect(chsh(), o); }));

  ObservableStrategy dummy;
  dummy.dim_a = dummy.dim_b = 1;
  dummy.psi = Vec::Ones(1);
  CHECK(throws_code(ErrorCode::NotBinaryGame,
                    [&] { extract_classical_from_perfect(magic_square(), dummy); }));
}

TEST_CASE("extraction on a trivial all-win game") {
  GameSpec g = GameSpec::blank(2, 2, 2, 2);
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      g.pi.push_back({s, t, ProbValue(Rational(1, 4))});
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) g.set_win(s, t, a, b, true);
    }
  const ValidatedGame game = validate(g);
  const ObservableStrategy o = to_observable_strategy(builtin_chsh());
  const DeterministicStrategy d = extract_classical_from_perfect(game, o);
  CHECK(*evaluate_deterministic_exact(game, d) == Rational(1));
}

TEST_CASE("extraction across 50 planted instances") {
  int perfect = 0;
  for (int i = 0; i < 50; ++i) {
    std::vector<int> a_star, b_star;
    const ValidatedGame game = planted_perfect_game(1000 + i, &a_star, &b_star);
    ObservableStrategy o;
    o.dim_a = o.dim_b = 2;
    o.psi = maximally_entangled(2);
    for (int s = 0; s < game.n_s(); ++s) o.alice.push_back((a_star[s] ? -1.0 : 1.0) * pauli_z());
    for (int t = 0; t < game.n_t(); ++t) o.bob.push_back((b_star[t] ? -1.0 : 1.0) * pauli_z());
    const DeterministicStrategy d = extract_classical_from_perfect(game, o);
    if (*evaluate_deterministic_exact(game, d) == Rational(1)) ++perfect;
  }
  CHECK(perfect == 50);
}
