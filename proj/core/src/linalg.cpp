#include "cgeo/linalg.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace cgeo {

namespace {

void check_dense_cap(int n_qubits) {
  if (n_qubits > kMaxDenseQubits) {
    throw std::invalid_argument("dense operations capped at " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  }
}

void check_same_dim(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
}

void check_unitary(const DenseMatrix& u, const char* what) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument(std::string(what) + " is not square");
  }
  if (!is_unitary(u, 1e-8)) {
    throw std::invalid_argument(std::string(what) + " is not unitary (1e-8)");
  }
}

}  // namespace

DenseMatrix dense(const PauliString& p) {
  check_dense_cap(p.n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << p.n_qubits;
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  // sigma_y = i sigma_x sigma_z, so P = i^{#Y} * X(x_mask) * Z(z_mask) and
  // <j ^ x_mask| P |j> = i^{#Y} (-1)^{popcount(z_mask & j)}.
  const int ny = std::popcount(p.x_mask & p.z_mask);
  static constexpr std::complex<double> kRoots[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> base = kRoots[ny & 3];
  for (Eigen::Index j = 0; j < dim; ++j) {
    const auto uj = static_cast<std::uint64_t>(j);
    const int sign = std::popcount(p.z_mask & uj) & 1;
    m(static_cast<Eigen::Index>(uj ^ p.x_mask), j) = sign ? -base : base;
  }
  return m;
}

DenseMatrix expm_hermitian(const DenseMatrix& h, double t) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("expm_hermitian: matrix is not square");
  }
  const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) {
    throw std::invalid_argument("expm_hermitian: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("expm_hermitian: eigendecomposition failed");
  }
  const Eigen::VectorXd& w = es.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    phases(i) = std::polar(1.0, w(i) * t);
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double norm_fbar(const DenseMatrix& a) {
  return a.norm() / std::sqrt(static_cast<double>(a.rows()));
}

double norm_op(const DenseMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(a.adjoint() * a,
                                                Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(top, 0.0));
}

bool is_unitary(const DenseMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const DenseMatrix g = u.adjoint() * u;
  return (g - DenseMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <=
         tol;
}

std::vector<double> principal_eigenphases(const DenseMatrix& u) {
  Eigen::ComplexEigenSolver<DenseMatrix> es(u, false);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigenphases: eigendecomposition failed");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(u.rows()));
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    double lambda = std::arg(es.eigenvalues()(i));
    // atan2 maps the negative real axis to -pi; the convention here is +pi.
    if (lambda <= -M_PI) lambda = M_PI;
    out.push_back(lambda);
  }
  return out;
}

double killing_distance(const DenseMatrix& u1, const DenseMatrix& u2) {
  check_same_dim(u1, u2);
  check_unitary(u1, "u1");
  check_unitary(u2, "u2");
  const std::vector<double> phases = principal_eigenphases(u2.adjoint() * u1);
  double sum = 0.0;
  for (double l : phases) sum += l * l;
  return std::sqrt(sum / static_cast<double>(u1.rows()));
}

double fbar_distance(const DenseMatrix& u1, const DenseMatrix& u2) {
  check_same_dim(u1, u2);
  return norm_fbar(u1 - u2);
}

double op_distance(const DenseMatrix& u1, const DenseMatrix& u2) {
  check_same_dim(u1, u2);
  return norm_op(u1 - u2);
}

double state_error(const DenseMatrix& u_a, const DenseMatrix& u_b,
                   const StateVector& psi) {
  check_same_dim(u_a, u_b);
  if (u_a.cols() != psi.size()) {
    throw std::invalid_argument("state dimension mismatch");
  }
  if (std::abs(psi.squaredNorm() - 1.0) > 1e-9) {
    throw std::invalid_argument("state is not normalized (1e-9)");
  }
  const std::complex<double> overlap = (u_a * psi).dot(u_b * psi);
  return std::sqrt(std::max(2.0 - 2.0 * overlap.real(), 0.0));
}

}  // namespace cgeo
