#pragma once

#include <cstdint>
#include <string>

#include "cgeo/schedule.hpp"

namespace cgeo {

struct BoundQuery {
  PenaltySchedule schedule;
  double length = 1.0;  // complexity length L
  double error = 0.1;
};

struct GateBound {
  double bound = 0.0;          // min(formula, trivial_cap)
  double formula = 0.0;        // schedule-dependent expression
  double trivial_cap = 0.0;    // N^2 4^N
  double threshold = 0.0;
  std::uint64_t n_cheap = 0;
  std::string variant;         // "killing", "tail" or "2N"
};

/// Gates needed to reach bi-invariant distance error of a target at
/// complexity length L: 6 pi N n_cheap^{3/2} L^2 / error with threshold
/// 4 L^2 / error^2, capped by the counting bound N^2 4^N.
GateBound gate_bound_killing(const BoundQuery& q);

/// Operator-norm variant: 12 N n_cheap^2 L^2 / error.  The threshold is the
/// smallest distinct penalty below the maximum whose harmonic tail is at
/// most error^2 / 4 L^2 ("tail"); otherwise 2^N 4 L^2 / error^2 ("2N").
/// Both are evaluated and the smaller bound returned.  error >= 2 L needs no
/// gates and reports 0.
GateBound gate_bound_op(const BoundQuery& q);

/// Same arithmetic with inner-product error in place of operator norm.
GateBound state_gate_bound(const BoundQuery& q);

/// Order-of-magnitude diameter estimates.  `raw` evaluates the max-min
/// expression over candidate thresholds exactly; `simplified` drops
/// subexponential factors the way the derivation does, so the two differ by
/// such factors at small N.
struct DiameterBound {
  double raw = 0.0;
  double simplified = 0.0;
};

/// max over thresholds of sqrt(min(4^N / n_cheap^{3/2}, threshold)).
DiameterBound diameter_lowerbound_unitary(const PenaltySchedule& s);

/// Larger of the two state-space bounds:
/// max over thresholds of min(2^{N/2} / n_cheap, threshold^{1/2} 2^{-N/2})
/// and (sum over all directions of 1/penalty)^{-1/2} scaled as below.
DiameterBound diameter_lowerbound_state(const PenaltySchedule& s);

/// ||U1 - U2||_op is sandwiched between lower_coeff * L and upper_coeff * L.
struct SandwichCoeffs {
  double lower_coeff = 0.0;  // (2/pi) / sqrt(max penalty)
  double upper_coeff = 0.0;  // sqrt(sum over all 4^N directions of 1/penalty)
};

SandwichCoeffs op_vs_complexity_sandwich(const PenaltySchedule& s);

}  // namespace cgeo
