#pragma once

#include <map>
#include <vector>

#include "cgeo/linalg.hpp"
#include "cgeo/pauli.hpp"
#include "cgeo/schedule.hpp"

namespace cgeo {

/// Sparse real combination sum_I h_I sigma_I.  Zero coefficients are never
/// stored; the map keeps term iteration deterministic.
struct Hamiltonian {
  int n_qubits = 0;
  std::map<PauliString, double> terms;

  explicit Hamiltonian(int n_qubits = 1) : n_qubits(n_qubits) {}

  /// Accumulates h into the coefficient of p, erasing exact zeros.
  void add(const PauliString& p, double h);

  double coeff(const PauliString& p) const;

  /// sqrt(sum h_I^2); equals the normalized Frobenius norm of dense().
  double norm_fbar() const;

  bool empty() const { return terms.empty(); }

  Hamiltonian& operator*=(double scale);
  Hamiltonian& operator+=(const Hamiltonian& other);
};

DenseMatrix dense(const Hamiltonian& h);

struct PathSegment {
  double duration = 0.0;
  Hamiltonian h;
};

/// Piecewise-constant curve through U(2^N).  Segment 0 acts first, so the
/// generated unitary is segments.back() * ... * segments.front() when each
/// segment is exponentiated.  global_phase (radians) multiplies the result
/// by e^{i phase}; normalize uses it to drop identity components.
struct Path {
  int n_qubits = 0;
  std::vector<PathSegment> segments;
  double global_phase = 0.0;

  explicit Path(int n_qubits = 1) : n_qubits(n_qubits) {}

  double total_duration() const;
};

/// ell-weighted size of a unit-F-bar Hamiltonian; conserved along geodesics
/// and equal to the ratio of complexity length to Killing length.
struct Difficulty {
  double gamma = 1.0;
};

/// Rescales every segment to ||H||_F-bar = 1, preserving the generated
/// unitary exactly.  Identity components become global phase; segments whose
/// Hamiltonian is purely identity are dropped.  Throws on a zero segment.
Path normalize(const Path& p);

double killing_length(const Path& p);
double complexity_length(const Path& p, const PenaltySchedule& s);

/// Requires ||h||_F-bar = 1 within 1e-9.
Difficulty difficulty(const Hamiltonian& h, const PenaltySchedule& s);

/// Exact product of segment exponentials e^{i dense(H) t}, with the global
/// phase applied.
DenseMatrix evolve(const Path& p);

struct GeodesicStats {
  double gamma_initial = 0.0;
  double gamma_final = 0.0;
  double max_rel_gamma_drift = 0.0;   // |gamma(t) - gamma(0)| / gamma(0)
  double max_fbar_drift = 0.0;        // | ||H(t)||_Fbar - ||H(0)||_Fbar |
  double max_h_drift = 0.0;           // max_I |h_I(t) - h_I(0)|
  std::size_t active_directions = 0;  // commutator closure size
};

/// Integrates the geodesic equation I(sigma_K) dh_K/dt =
/// sum_J h_J c_{J,K} with i[H, sigma_K] = sum_J c_{J,K} sigma_J, by
/// fixed-step RK4 over the commutator closure of h0's support.  Returns a
/// piecewise-constant Path sampled once per step.
Path integrate_geodesic(const Hamiltonian& h0, const PenaltySchedule& s,
                        double total_time, double dt,
                        GeodesicStats* stats = nullptr);

}  // namespace cgeo
