#include "nlg/tsirelson.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "nlg/rng.hpp"

namespace nlg {

namespace {

CliffordFamily build_clifford(int m) {
  const int k = (m + 1) / 2;
  const Eigen::Index dim = Eigen::Index(1) << k;
  CliffordFamily fam;
  fam.m = m;
  fam.qubits = k;
  const Mat sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  for (int i = 1; i <= m; ++i) {
    const int j = (i + 1) / 2;        // qubit carrying the x / y factor, 1-based
    const bool use_x = (i % 2 == 1);  // odd index -> sigma_x, even -> sigma_y
    Mat g = Mat::Identity(1, 1);
    for (int q = 1; q <= k; ++q) {
      if (q < j)
        g = kron(g, sz);
      else if (q == j)
        g = kron(g, use_x ? sx : sy);
      else
        g = kron(g, Mat::Identity(2, 2));
    }
    if (g.rows() != dim) fail(ErrorCode::DomainError, "clifford construction dimension bug");
    fam.generators.push_back(g);
  }
  return fam;
}

}  // namespace

const CliffordFamily& clifford_generators(int m) {
  if (m < 1 || m > 20)
    fail(ErrorCode::TooLarge, "generator count must be in 1..20, got " + std::to_string(m));
  static std::mutex mutex;
  static std::map<int, CliffordFamily> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, build_clifford(m)).first;
  return it->second;
}

ObservableStrategy vectors_to_strategy(const VectorStrategy& vs) {
  vs.check();
  if (vs.m > 20) fail(ErrorCode::TooLarge, "vector dimension exceeds the 20-generator cap");
  const CliffordFamily& fam = clifford_generators(vs.m);
  const Eigen::Index dim = Eigen::Index(1) << fam.qubits;

  ObservableStrategy o;
  o.dim_a = o.dim_b = static_cast<int>(dim);
  o.psi = maximally_entangled(static_cast<int>(dim));
  for (const auto& u : vs.u) {
    Mat a = Mat::Zero(dim, dim);
    for (int i = 0; i < vs.m; ++i) a += u[i] * fam.generators[i];
    o.alice.push_back(a);
  }
  // Bob uses transposed generators: with <psi|X (x) Y|psi> = Tr(X^T Y)/d this
  // makes the correlation equal <u|v> exactly, not up to sign.
  for (const auto& v : vs.v) {
    Mat b = Mat::Zero(dim, dim);
    for (int i = 0; i < vs.m; ++i) b += v[i] * fam.generators[i].transpose();
    o.bob.push_back(b);
  }
  return o;
}

VectorStrategy strategy_to_vectors(const ObservableStrategy& o) {
  check_observable_strategy(o);
  const QuantumTolerances& tol = quantum_tolerances();
  const Eigen::Index n = o.psi.size();

  VectorStrategy vs;
  vs.m = static_cast<int>(2 * n);
  auto embed = [&](const Vec& image) {
    Eigen::VectorXd w(2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
      w[i] = image[i].real();
      w[n + i] = image[i].imag();
    }
    return w;
  };
  std::vector<Vec> left_images, right_images;
  for (const Mat& a : o.alice) {
    left_images.push_back(apply_left(a, o.psi, o.dim_b));
    vs.u.push_back(embed(left_images.back()));
  }
  for (const Mat& b : o.bob) {
    right_images.push_back(apply_right(b, o.psi, o.dim_a));
    vs.v.push_back(embed(right_images.back()));
  }
  // Hermitian observables make the complex pairings real; verify.
  for (const Vec& x : left_images)
    for (const Vec& y : right_images)
      if (std::abs(x.dot(y).imag()) > tol.imaginary)
        fail(ErrorCode::NonHermitian, "complex pairing has a non-vanishing imaginary part");
  return vs;
}

int jl_dimension(int points, double epsilon) {
  const double denom = epsilon * epsilon / 2.0 - epsilon * epsilon * epsilon / 3.0;
  const double bound = 4.0 / denom * std::log(static_cast<double>(points));
  int k = static_cast<int>(std::ceil(bound));
  if (k % 2 == 1) ++k;
  return k;
}

JlReduction jl_reduce(const VectorStrategy& vs, double epsilon, std::uint64_t seed) {
  if (!(epsilon > 0.0 && epsilon < 0.1))
    fail(ErrorCode::EpsilonOutOfRange, "epsilon must lie in (0, 1/10)");
  vs.check();

  const int n_points = static_cast<int>(vs.u.size() + vs.v.size()) + 1;  // + origin
  const int k = jl_dimension(n_points, epsilon);

  JlReduction out;
  out.k = k;
  if (vs.m <= k) {
    // Already small enough: the identity map satisfies every bound with
    // distortion zero.
    out.vectors = vs;
    out.identity = true;
    return out;
  }

  std::vector<Eigen::VectorXd> points;  // all inputs plus the origin
  for (const auto& w : vs.u) points.push_back(w);
  for (const auto& w : vs.v) points.push_back(w);
  points.push_back(Eigen::VectorXd::Zero(vs.m));

  constexpr int kMaxDraws = 64;
  double worst_seen = 0.0;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    auto rng = rng_stream(seed, "jl-reduce", static_cast<std::uint64_t>(draw));
    Eigen::MatrixXd map(k, vs.m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < vs.m; ++c) map(r, c) = gaussian(rng) * scale;

    std::vector<Eigen::VectorXd> images;
    images.reserve(points.size());
    for (const auto& p : points) images.push_back(map * p);

    // The lemma's displayed inequality for every pair of the point set
    // (a linear map sends the origin to the origin, so f(0) = 0 holds by
    // construction and the 0-point rows verify the norm bounds).
    double worst = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        const double ref = (points[i] - points[j]).squaredNorm();
        if (ref == 0.0) continue;
        const double got = (images[i] - images[j]).squaredNorm();
        const double ratio = got / ref;
        worst = std::max(worst, std::abs(ratio - 1.0));
        if (ratio < 1.0 - epsilon || ratio > 1.0 + epsilon) {
          ok = false;
          break;
        }
      }
    worst_seen = std::max(worst_seen, worst);
    if (!ok) continue;

    JlReduction candidate;
    candidate.k = k;
    candidate.draws = draw + 1;
    candidate.worst_pair_distortion = worst;
    candidate.vectors.m = k;
    bool normable = true;
    auto renormalize = [&](const Eigen::VectorXd& image) {
      const double norm = image.norm();
      if (norm < 1e-12) normable = false;
      return normable ? Eigen::VectorXd(image / norm) : image;
    };
    for (std::size_t i = 0; i < vs.u.size(); ++i)
      candidate.vectors.u.push_back(renormalize(images[i]));
    for (std::size_t j = 0; j < vs.v.size(); ++j)
      candidate.vectors.v.push_back(renormalize(images[vs.u.size() + j]));
    if (!normable) continue;

    // The proof's conclusion: renormalized inner products move by < 2 eps.
    double worst_inner = 0.0;
    for (std::size_t s = 0; s < vs.u.size(); ++s)
      for (std::size_t t = 0; t < vs.v.size(); ++t)
        worst_inner = std::max(
            worst_inner, std::abs(candidate.vectors.u[s].dot(candidate.vectors.v[t]) -
                                  vs.u[s].dot(vs.v[t])));
    candidate.worst_inner_shift = worst_inner;
    if (worst_inner >= 2.0 * epsilon) continue;
    return candidate;
  }
  fail(ErrorCode::ResampleLimitExceeded,
       "no admissible projection in 64 draws; worst distortion " + std::to_string(worst_seen));
}

EntanglementReport entanglement_report(const XorGame& x) {
  EntanglementReport rep;
  rep.m = std::min(x.n_s, x.n_t);
  rep.optimal_qubits = (rep.m + 1) / 2;
  const int points = x.n_s + x.n_t + 1;
  for (double eps : {0.01, 0.02, 0.05, 0.075, 0.099}) {
    const int k = jl_dimension(points, eps);
    rep.rows.push_back({eps, k, k / 2});
  }
  return rep;
}

}  // namespace nlg
