#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace nlg {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealMat = Eigen::MatrixXd;
using RealVec = Eigen::VectorXd;

struct Eigensystem {
  Eigen::VectorXd values;  // ascending
  Mat vectors;             // unit eigenvectors in matching columns
};

// Cyclic Jacobi diagonalization for Hermitian matrices (complex 2x2 unitary
// annihilation). Stops when the off-diagonal Frobenius norm drops below
// 1e-13 times the matrix norm. Small dense matrices only.
Eigensystem jacobi_eigensystem(const Mat& hermitian);

double min_eigenvalue(const Mat& hermitian);

Mat kron(const Mat& a, const Mat& b);

// (1/sqrt(d)) sum_i |ii>, Alice-major index a*d + b.
Vec maximally_entangled(int d);

bool is_hermitian(const Mat& a, double tol);
double hermiticity_residual(const Mat& a);

Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

// <psi| X (x) Y |psi> for psi in Alice-major ordering; never materializes the
// tensor product.
Complex bipartite_expectation(const Vec& psi, const Mat& x, const Mat& y);

// (X (x) 1)|psi> and (1 (x) Y)|psi> in Alice-major ordering.
Vec apply_left(const Mat& x, const Vec& psi, int dim_b);
Vec apply_right(const Mat& y, const Vec& psi, int dim_a);

}  // namespace nlg
