#include "cgeo/rng.hpp"

#include <cmath>

#include "cgeo/linalg.hpp"

namespace cgeo {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::split() { return Rng(splitmix64(seed_ ^ splitmix64(~next_u64()))); }

std::uint64_t Rng::next_u64() { return splitmix64(seed_ + splitmix64(counter_++)); }

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_uniform(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

double Rng::next_normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u1 = next_double();
  while (u1 == 0.0) u1 = next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

Hamiltonian random_unit_hamiltonian(Rng& rng, int n_qubits) {
  Hamiltonian h(n_qubits);
  for (const PauliString& p : enumerate_paulis(n_qubits)) {
    if (p.is_identity()) continue;
    h.add(p, rng.next_normal());
  }
  const double norm = h.norm_fbar();
  h *= 1.0 / norm;
  return h;
}

DenseMatrix random_unitary(Rng& rng, int n_qubits) {
  const Hamiltonian h = random_unit_hamiltonian(rng, n_qubits);
  const double t = rng.next_uniform(0.0, M_PI);
  return expm_hermitian(dense(h), t);
}

Path random_normalized_path(Rng& rng, int n_qubits, int segment_count,
                            double max_duration) {
  Path p(n_qubits);
  for (int i = 0; i < segment_count; ++i) {
    double t = rng.next_uniform(0.0, max_duration);
    if (t == 0.0) t = max_duration;
    p.segments.push_back(
        PathSegment{t, random_unit_hamiltonian(rng, n_qubits)});
  }
  return p;
}

StateVector random_state(Rng& rng, int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  StateVector psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    psi(i) = std::complex<double>(rng.next_normal(), rng.next_normal());
  }
  psi /= psi.norm();
  return psi;
}

}  // namespace cgeo
