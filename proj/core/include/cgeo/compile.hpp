#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgeo/path.hpp"

namespace cgeo {

struct TwoLocalGate {
  int qubit_a = 0;
  int qubit_b = 1;
  Eigen::Matrix4cd block;  // basis index = bit(qubit_a) + 2 * bit(qubit_b)
};

/// Gate 0 acts first.  The dense embedding is
/// global_phase * embed(gates.back()) * ... * embed(gates.front()).
struct Circuit {
  int n_qubits = 0;
  std::vector<TwoLocalGate> gates;
  std::complex<double> global_phase = 1.0;

  explicit Circuit(int n_qubits = 2) : n_qubits(n_qubits) {}

  std::size_t gate_count() const { return gates.size(); }
};

DenseMatrix circuit_to_dense(const Circuit& c);

/// Keeps exactly the terms with penalty <= threshold.
Hamiltonian prune(const Hamiltonian& h, const PenaltySchedule& s,
                  double threshold);

/// Splits [0, total duration] into ceil(T / delta) windows (the last window
/// possibly shorter) and returns each window's duration-weighted average
/// Hamiltonian with its actual duration.
std::vector<PathSegment> segment_average(const Path& p, double delta);

/// One Trotter factor ordering with its exact leading-error summary.
struct OrderedTerms {
  std::vector<std::pair<PauliString, double>> terms;  // application order
  /// F-bar norm squared of (1/2) sum over ordered pairs h_I h_J [s_I, s_J]
  /// with I applied before J, tracked exactly in Pauli space.
  double leading_error_fbar_sq = 0.0;
};

/// Deque ordering: terms consumed by descending |h|, ties by mask; each is
/// placed at the front or back, whichever keeps the accumulated leading
/// error smaller.  Guarantees leading_error_fbar_sq <= sum_{I<J} h_I^2 h_J^2.
OrderedTerms trotter_order_greedy(const Hamiltonian& h);

/// Baseline: terms in map order (ascending masks).
OrderedTerms trotter_order_naive(const Hamiltonian& h);

/// sum_{I<J} h_I^2 h_J^2, the ordering guarantee's right side.
double pairwise_sq_bound(const Hamiltonian& h);

/// Exact circuit for e^{i dense(p) angle}: empty (phase only) at weight 0,
/// one gate at weight <= 2, and 2k-3 gates at weight k >= 3.
Circuit synthesize_monomial(const PauliString& p, double angle);

enum class ErrorNorm { kKilling, kOp };

struct CompileBudget {
  double target_error = 0.1;
  ErrorNorm error_norm = ErrorNorm::kKilling;
  bool greedy_order = true;
};

struct CompileReport {
  std::size_t gate_count = 0;
  std::size_t segment_count = 0;
  double delta = 0.0;
  double threshold = 0.0;        // pruning threshold actually used
  std::uint64_t n_cheap = 0;     // directions with penalty <= threshold
  std::string threshold_variant; // "killing", "tail" or "2N"
  double complexity_length = 0.0;
  double killing_length = 0.0;
  double measured_error_killing = 0.0;
  double measured_error_fbar = 0.0;
  double measured_error_op = 0.0;
  double predicted_error_bound = 0.0;  // for the budgeted norm
  double predicted_gate_bound = 0.0;   // 2 N S n_cheap
};

struct InfeasibleBudget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Full lowering: prune, window-average, Trotterize, synthesize monomials.
/// The budget is split in half between pruning and the averaging+Trotter
/// terms.  Throws InfeasibleBudget when no admissible threshold exists.
/// Requires a normalized path (every segment unit-F-bar).
std::pair<Circuit, CompileReport> compile(const Path& p,
                                          const PenaltySchedule& s,
                                          const CompileBudget& budget);

}  // namespace cgeo
