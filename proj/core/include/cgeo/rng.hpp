#pragma once

#include <cstdint>

#include "cgeo/compile.hpp"
#include "cgeo/path.hpp"

namespace cgeo {

/// Counter-based splitmix64 generator.  Unlike the standard library
/// distributions, every draw is bit-identical across platforms, which the
/// replayable trial suites rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {}

  /// Derives an independent stream; drawing from the child never affects
  /// the parent.
  Rng split();

  std::uint64_t next_u64();

  /// Uniform in [0, 1).
  double next_double();

  double next_uniform(double lo, double hi);

  /// Standard normal via Box-Muller (one draw per call; the pair's second
  /// member is cached).
  double next_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

/// Hamiltonian with iid standard-normal coefficients on every non-identity
/// direction, rescaled to unit F-bar norm.
Hamiltonian random_unit_hamiltonian(Rng& rng, int n_qubits);

/// e^{iHt} with H = random_unit_hamiltonian and t uniform in [0, pi].
DenseMatrix random_unitary(Rng& rng, int n_qubits);

/// Normalized path with the requested number of segments; each segment gets
/// an independent unit Hamiltonian and duration uniform in (0, max_duration].
Path random_normalized_path(Rng& rng, int n_qubits, int segment_count,
                            double max_duration);

StateVector random_state(Rng& rng, int n_qubits);

}  // namespace cgeo
