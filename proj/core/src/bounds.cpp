#include "cgeo/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_query(const BoundQuery& q) {
  if (!(q.length > 0.0) || !(q.error > 0.0)) {
    throw std::invalid_argument("bound query needs L > 0 and error > 0");
  }
}

double trivial_cap(int n) {
  return static_cast<double>(n) * n * std::pow(4.0, n);
}

}  // namespace

GateBound gate_bound_killing(const BoundQuery& q) {
  check_query(q);
  const int n = q.schedule.n_qubits();
  GateBound out;
  out.variant = "killing";
  out.threshold = 4.0 * q.length * q.length / (q.error * q.error);
  out.n_cheap = q.schedule.count_cheap(out.threshold);
  out.formula = 6.0 * M_PI * n *
                std::pow(static_cast<double>(out.n_cheap), 1.5) * q.length *
                q.length / q.error;
  out.trivial_cap = trivial_cap(n);
  out.bound = std::min(out.formula, out.trivial_cap);
  return out;
}

GateBound gate_bound_op(const BoundQuery& q) {
  check_query(q);
  const int n = q.schedule.n_qubits();
  const double max_pen = q.schedule.max_penalty();
  const auto op_formula = [&](std::uint64_t n_cheap) {
    return 12.0 * n * static_cast<double>(n_cheap) *
           static_cast<double>(n_cheap) * q.length * q.length / q.error;
  };

  GateBound tail_variant;
  tail_variant.formula = kInf;
  const double tail_target = q.error * q.error / (4.0 * q.length * q.length);
  for (double v : q.schedule.distinct_penalties()) {
    if (v >= max_pen) break;
    if (q.schedule.harmonic_tail(v) <= tail_target) {
      tail_variant.variant = "tail";
      tail_variant.threshold = v;
      tail_variant.n_cheap = q.schedule.count_cheap(v);
      tail_variant.formula = op_formula(tail_variant.n_cheap);
      break;
    }
  }

  GateBound dim_variant;
  dim_variant.variant = "2N";
  dim_variant.threshold =
      std::pow(2.0, n) * 4.0 * q.length * q.length / (q.error * q.error);
  dim_variant.n_cheap = q.schedule.count_cheap(dim_variant.threshold);
  dim_variant.formula = op_formula(dim_variant.n_cheap);

  GateBound out =
      tail_variant.formula < dim_variant.formula ? tail_variant : dim_variant;
  out.trivial_cap = trivial_cap(n);
  out.bound = std::min(out.formula, out.trivial_cap);
  if (q.error >= 2.0 * q.length) out.bound = 0.0;  // already within error
  return out;
}

GateBound state_gate_bound(const BoundQuery& q) {
  // Inner-product error obeys the same budget arithmetic as operator norm.
  return gate_bound_op(q);
}

DiameterBound diameter_lowerbound_unitary(const PenaltySchedule& s) {
  const int n = s.n_qubits();
  const double four_n = std::pow(4.0, n);
  const std::vector<double> values = s.distinct_penalties();

  DiameterBound out;
  // Over each threshold interval the counting piece is constant and the
  // threshold piece grows, so the supremum sits at the interval's right end.
  double best = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double n_cheap = static_cast<double>(s.count_cheap(values[i]));
    const double counting = four_n / std::pow(n_cheap, 1.5);
    const double right = i + 1 < values.size() ? values[i + 1] : kInf;
    best = std::max(best, std::min(counting, right));
  }
  out.raw = std::sqrt(best);

  switch (s.kind()) {
    case PenaltySchedule::Kind::kCliff:
      out.simplified =
          std::min(std::pow(2.0, n), std::sqrt(s.param_penalty()));
      break;
    case PenaltySchedule::Kind::kBinomial: {
      const double a = s.param_alpha();
      out.simplified = std::pow(std::pow(2.0, n), 2.0 * a / (3.0 + 2.0 * a));
      break;
    }
    case PenaltySchedule::Kind::kExponential: {
      const double x = s.param_x();
      int k_bar = n;
      for (int k = 1; k <= n; ++k) {
        const double nk = static_cast<double>(pauli_count_weight(n, k));
        if (std::pow(nk, 1.5) * std::pow(x, 2 * k) >= four_n) {
          k_bar = k;
          break;
        }
      }
      out.simplified = std::pow(x, k_bar);
      break;
    }
    default:
      out.simplified = out.raw;
      break;
  }
  return out;
}

DiameterBound diameter_lowerbound_state(const PenaltySchedule& s) {
  const int n = s.n_qubits();
  const double root_dim = std::pow(2.0, 0.5 * n);
  const std::vector<double> values = s.distinct_penalties();

  double best = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double counting =
        root_dim / static_cast<double>(s.count_cheap(values[i]));
    const double tail = s.harmonic_tail(values[i]);
    const double b1 =
        std::min(counting, tail > 0.0 ? 1.0 / std::sqrt(tail) : kInf);
    const double right = i + 1 < values.size() ? values[i + 1] : kInf;
    const double b2 = std::min(counting, std::sqrt(right / root_dim / root_dim));
    best = std::max({best, b1, b2});
  }

  DiameterBound out;
  out.raw = best;
  switch (s.kind()) {
    case PenaltySchedule::Kind::kCliff:
      out.simplified = std::min(root_dim,
                                std::sqrt(s.param_penalty()) / root_dim);
      break;
    case PenaltySchedule::Kind::kBinomial: {
      const double a = s.param_alpha();
      if (a >= 1.0) {
        out.simplified = std::pow(root_dim, (a - 1.0) / (a + 1.0));
      } else {
        out.simplified = out.raw;
      }
      break;
    }
    case PenaltySchedule::Kind::kExponential: {
      const double x = s.param_x();
      const double dim = root_dim * root_dim;
      int k_bar = n;
      for (int k = 1; k <= n; ++k) {
        const double nk = static_cast<double>(pauli_count_weight(n, k));
        if (nk * std::pow(x, 2 * k) >= dim) {
          k_bar = k;
          break;
        }
      }
      out.simplified = std::pow(x, 2 * k_bar) / root_dim;
      break;
    }
    default:
      out.simplified = out.raw;
      break;
  }
  return out;
}

SandwichCoeffs op_vs_complexity_sandwich(const PenaltySchedule& s) {
  SandwichCoeffs out;
  out.lower_coeff = (2.0 / M_PI) / std::sqrt(s.max_penalty());
  out.upper_coeff = std::sqrt(s.harmonic_total());
  return out;
}

}  // namespace cgeo
