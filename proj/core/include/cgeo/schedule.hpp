#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cgeo/pauli.hpp"

namespace cgeo {

/// A penalty assignment to Pauli directions, diagonal in the Pauli basis.
/// All penalties are >= 1; the identity direction always has penalty 1.
/// Weight-dependent kinds assign equal penalty to all strings of equal
/// weight, which keeps counting and tail sums in closed form.
class PenaltySchedule {
 public:
  enum class Kind { kCliff, kBinomial, kExponential, kDelayedCliff, kTable, kExplicit };

  /// Penalty 1 for weight <= 2, penalty_value above.
  static PenaltySchedule cliff(int n_qubits, double penalty_value);

  /// Penalty N_k^alpha at weight k, where N_k = C(N, k) 3^k.
  static PenaltySchedule binomial(int n_qubits, double alpha);

  /// Penalty x^{2k} at weight k, x >= 1.
  static PenaltySchedule exponential(int n_qubits, double x);

  /// Penalty 1 for weight < k0, penalty_value at and above.
  static PenaltySchedule delayed_cliff(int n_qubits, int k0,
                                       double penalty_value);

  /// Arbitrary per-weight penalties; by_weight[k] applies at weight k and
  /// must have size n_qubits + 1.
  static PenaltySchedule table(int n_qubits, std::vector<double> by_weight);

  /// Arbitrary per-string penalties; unlisted strings default to 1.
  static PenaltySchedule explicit_map(int n_qubits,
                                      std::map<PauliString, double> penalties);

  Kind kind() const { return kind_; }
  int n_qubits() const { return n_qubits_; }

  double penalty(const PauliString& p) const;
  double penalty_for_weight(int k) const;  // rejects kExplicit

  bool is_weight_dependent() const { return kind_ != Kind::kExplicit; }

  /// #{sigma_I : penalty <= threshold}, identity included.
  std::uint64_t count_cheap(double threshold) const;

  /// Sum of 1/penalty over strings with penalty strictly above threshold.
  double harmonic_tail(double threshold) const;

  /// Sum of 1/penalty over all 4^N strings, identity included.
  double harmonic_total() const;

  double max_penalty() const;
  double min_penalty() const;

  /// Distinct penalty values in increasing order.
  std::vector<double> distinct_penalties() const;

  /// Parameters behind the factories, for serialization.
  double param_penalty() const { return param_a_; }  // cliff / delayed_cliff
  double param_alpha() const { return param_a_; }    // binomial
  double param_x() const { return param_a_; }        // exponential
  int param_k0() const { return k0_; }
  const std::vector<double>& weight_table() const { return by_weight_; }
  const std::map<PauliString, double>& explicit_penalties() const {
    return explicit_;
  }

 private:
  PenaltySchedule(Kind kind, int n_qubits);

  Kind kind_;
  int n_qubits_;
  double param_a_ = 0.0;
  int k0_ = 0;
  std::vector<double> by_weight_;  // filled for all weight-dependent kinds
  std::map<PauliString, double> explicit_;
};

}  // namespace cgeo
