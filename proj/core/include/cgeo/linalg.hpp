#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cgeo/pauli.hpp"

namespace cgeo {

using DenseMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Largest qubit count for dense 2^N x 2^N work (dim 256).
inline constexpr int kMaxDenseQubits = 8;

/// Qubit q maps to bit q of the computational-basis index (qubit 0 is the
/// least significant bit).
DenseMatrix dense(const PauliString& p);

/// e^{i h t} for Hermitian h, via full eigendecomposition.
/// Throws if h is not Hermitian within 1e-10 (max-abs entry).
DenseMatrix expm_hermitian(const DenseMatrix& h, double t = 1.0);

/// Normalized Frobenius norm 2^{-N/2} ||A||_F (trace normalized so the
/// identity has norm 1).
double norm_fbar(const DenseMatrix& a);

/// Operator norm: largest singular value, from the eigenvalues of A^dag A.
double norm_op(const DenseMatrix& a);

bool is_unitary(const DenseMatrix& u, double tol);

/// Eigenphases of u in the principal branch (-pi, pi], with +pi chosen at
/// the branch boundary.
std::vector<double> principal_eigenphases(const DenseMatrix& u);

/// Bi-invariant geodesic distance in the penalty-free metric:
/// 2^{-N/2} sqrt(sum of squared principal eigenphases of u2^dag u1).
/// Throws unless both inputs are unitary within 1e-8.
double killing_distance(const DenseMatrix& u1, const DenseMatrix& u2);

double fbar_distance(const DenseMatrix& u1, const DenseMatrix& u2);
double op_distance(const DenseMatrix& u1, const DenseMatrix& u2);

/// Worst-case state-level error sqrt(2 - 2 Re<psi_a|psi_b>) with
/// psi_a = u_a psi, psi_b = u_b psi.  Throws if psi is not normalized
/// within 1e-9.
double state_error(const DenseMatrix& u_a, const DenseMatrix& u_b,
                   const StateVector& psi);

}  // namespace cgeo
