#include "nlg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nlg/errors.hpp"

namespace nlg {

namespace {

double off_diagonal_norm(const Mat& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

Eigensystem jacobi_eigensystem(const Mat& input) {
  if (input.rows() != input.cols())
    fail(ErrorCode::DimensionMismatch, "eigensystem of non-square matrix");
  if (!is_hermitian(input, 1e-9))
    fail(ErrorCode::NonHermitian, "eigensystem requires a Hermitian matrix");

  const Eigen::Index n = input.rows();
  Mat a = (input + input.adjoint()) / 2.0;  // symmetrize away roundoff
  Mat v = Mat::Identity(n, n);
  const double threshold = 1e-13 * std::max(a.norm(), 1e-300);

  for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > threshold; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double beta = std::abs(a(p, q));
        if (beta <= threshold / (1.0 + n)) continue;
        const Complex phase = a(p, q) / beta;  // a_pq = beta * phase
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Real Jacobi angle for [[app, beta], [beta, aqq]].
        const double tau = (aqq - app) / (2.0 * beta);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Column rotation: [col_p, col_q] <- [col_p, col_q] * J with
        // J = [[c, s*phase], [-s*conj(phase), c]]; annihilates a(p,q) after
        // the matching row update.
        const Complex jpq = s * phase;
        const Complex jqp = -s * std::conj(phase);
        for (Eigen::Index i = 0; i < n; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip + jqp * aiq;
          a(i, q) = jpq * aip + c * aiq;
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip + jqp * viq;
          v(i, q) = jpq * vip + c * viq;
        }
        for (Eigen::Index j = 0; j < n; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj + std::conj(jqp) * aqj;
          a(q, j) = std::conj(jpq) * apj + c * aqj;
        }
        a(p, q) = std::conj(a(q, p));
      }
    }
  }

  Eigensystem out;
  out.values.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) out.values[i] = a(i, i).real();
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return out.values[x] < out.values[y]; });
  Eigen::VectorXd sorted(n);
  Mat cols(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    sorted[i] = out.values[order[i]];
    cols.col(i) = v.col(order[i]);
  }
  out.values = sorted;
  out.vectors = cols;
  return out;
}

double min_eigenvalue(const Mat& hermitian) {
  return jacobi_eigensystem(hermitian).values[0];
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec maximally_entangled(int d) {
  Vec psi = Vec::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) psi[static_cast<Eigen::Index>(i) * d + i] = amp;
  return psi;
}

double hermiticity_residual(const Mat& a) {
  return (a - a.adjoint()).norm();
}

bool is_hermitian(const Mat& a, double tol) {
  return a.rows() == a.cols() && hermiticity_residual(a) <= tol;
}

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

namespace {

using PsiMap = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                              Eigen::RowMajor>>;

}  // namespace

Complex bipartite_expectation(const Vec& psi, const Mat& x, const Mat& y) {
  const Eigen::Index da = x.rows(), db = y.rows();
  if (x.cols() != da || y.cols() != db || psi.size() != da * db)
    fail(ErrorCode::DimensionMismatch, "bipartite expectation dimensions do not match");
  PsiMap m(psi.data(), da, db);
  return (m.conjugate().cwiseProduct(x * m * y.transpose())).sum();
}

Vec apply_left(const Mat& x, const Vec& psi, int dim_b) {
  const Eigen::Index da = x.rows();
  if (x.cols() != da || psi.size() != da * dim_b)
    fail(ErrorCode::DimensionMismatch, "apply_left dimensions do not match");
  PsiMap m(psi.data(), da, dim_b);
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> r = x * m;
  return Eigen::Map<const Vec>(r.data(), psi.size());
}

Vec apply_right(const Mat& y, const Vec& psi, int dim_a) {
  const Eigen::Index db = y.rows();
  if (y.cols() != db || psi.size() != dim_a * db)
    fail(ErrorCode::DimensionMismatch, "apply_right dimensions do not match");
  PsiMap m(psi.data(), dim_a, db);
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> r = m * y.transpose();
  return Eigen::Map<const Vec>(r.data(), psi.size());
}

}  // namespace nlg
