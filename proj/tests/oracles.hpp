// Independent reference implementations the tests compare against.  These
// deliberately avoid the library's algorithms: Pauli matrices come from
// explicit Kronecker products, exponentials from Taylor series with scaling
// and squaring, and path evolution from fine sub-stepping.
#pragma once

#include <complex>

#include "cgeo/linalg.hpp"
#include "cgeo/path.hpp"

namespace oracles {

inline Eigen::Matrix2cd single_pauli(int letter) {
  using c = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (letter) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, c(0, -1), c(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Kronecker-product construction with qubit 0 as the least significant
// index bit, so higher qubits go on the left factor.
inline cgeo::DenseMatrix dense_pauli(const cgeo::PauliString& p) {
  cgeo::DenseMatrix m = single_pauli(p.letter(p.n_qubits - 1));
  for (int q = p.n_qubits - 2; q >= 0; --q) {
    const Eigen::Matrix2cd s = single_pauli(p.letter(q));
    cgeo::DenseMatrix next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c2 = 0; c2 < m.cols(); ++c2) {
        next.block<2, 2>(2 * r, 2 * c2) = m(r, c2) * s;
      }
    }
    m = next;
  }
  return m;
}

// e^{i h t} by Taylor series on h / 2^s followed by repeated squaring.
inline cgeo::DenseMatrix expm_taylor(const cgeo::DenseMatrix& h, double t) {
  const std::complex<double> i(0, 1);
  cgeo::DenseMatrix a = i * t * h;
  int squarings = 0;
  while (a.cwiseAbs().maxCoeff() * static_cast<double>(a.rows()) > 0.5) {
    a *= 0.5;
    ++squarings;
  }
  cgeo::DenseMatrix result = cgeo::DenseMatrix::Identity(a.rows(), a.cols());
  cgeo::DenseMatrix term = result;
  for (int k = 1; k <= 24; ++k) {
    term = (term * a / static_cast<double>(k)).eval();
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = (result * result).eval();
  return result;
}

// Path-ordered product from many small sub-steps per segment.
inline cgeo::DenseMatrix evolve_fine(const cgeo::Path& p, int substeps) {
  const Eigen::Index dim = Eigen::Index{1} << p.n_qubits;
  cgeo::DenseMatrix u = cgeo::DenseMatrix::Identity(dim, dim);
  for (const cgeo::PathSegment& seg : p.segments) {
    const cgeo::DenseMatrix hd = [&] {
      cgeo::DenseMatrix m = cgeo::DenseMatrix::Zero(dim, dim);
      for (const auto& [pauli, c] : seg.h.terms) m += c * dense_pauli(pauli);
      return m;
    }();
    const cgeo::DenseMatrix step =
        expm_taylor(hd, seg.duration / static_cast<double>(substeps));
    for (int s = 0; s < substeps; ++s) u = (step * u).eval();
  }
  return std::polar(1.0, p.global_phase) * u;
}

}  // namespace oracles
