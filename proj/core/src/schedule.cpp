#include "cgeo/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cgeo {

namespace {

void check_size(int n_qubits) {
  if (n_qubits < 1 || n_qubits > PauliString::kMaxQubits) {
    throw std::invalid_argument("n_qubits out of range");
  }
}

void check_penalty(double value) {
  if (!(value >= 1.0) || !std::isfinite(value)) {
    throw std::invalid_argument("penalties must be finite and >= 1");
  }
}

}  // namespace

PenaltySchedule::PenaltySchedule(Kind kind, int n_qubits)
    : kind_(kind), n_qubits_(n_qubits) {
  check_size(n_qubits);
}

PenaltySchedule PenaltySchedule::cliff(int n_qubits, double penalty_value) {
  check_penalty(penalty_value);
  PenaltySchedule s(Kind::kCliff, n_qubits);
  s.param_a_ = penalty_value;
  s.by_weight_.assign(static_cast<std::size_t>(n_qubits) + 1, penalty_value);
  for (int k = 0; k <= std::min(2, n_qubits); ++k) s.by_weight_[k] = 1.0;
  return s;
}

PenaltySchedule PenaltySchedule::binomial(int n_qubits, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("binomial schedule needs alpha >= 0");
  }
  PenaltySchedule s(Kind::kBinomial, n_qubits);
  s.param_a_ = alpha;
  s.by_weight_.resize(static_cast<std::size_t>(n_qubits) + 1);
  s.by_weight_[0] = 1.0;
  for (int k = 1; k <= n_qubits; ++k) {
    s.by_weight_[k] =
        std::pow(static_cast<double>(pauli_count_weight(n_qubits, k)), alpha);
  }
  return s;
}

PenaltySchedule PenaltySchedule::exponential(int n_qubits, double x) {
  if (!(x >= 1.0) || !std::isfinite(x)) {
    throw std::invalid_argument("exponential schedule needs x >= 1");
  }
  PenaltySchedule s(Kind::kExponential, n_qubits);
  s.param_a_ = x;
  s.by_weight_.resize(static_cast<std::size_t>(n_qubits) + 1);
  s.by_weight_[0] = 1.0;
  for (int k = 1; k <= n_qubits; ++k) s.by_weight_[k] = std::pow(x, 2 * k);
  return s;
}

PenaltySchedule PenaltySchedule::delayed_cliff(int n_qubits, int k0,
                                               double penalty_value) {
  check_penalty(penalty_value);
  if (k0 < 1 || k0 > n_qubits + 1) {
    throw std::invalid_argument("delayed_cliff needs 1 <= k0 <= N + 1");
  }
  PenaltySchedule s(Kind::kDelayedCliff, n_qubits);
  s.param_a_ = penalty_value;
  s.k0_ = k0;
  s.by_weight_.assign(static_cast<std::size_t>(n_qubits) + 1, penalty_value);
  for (int k = 0; k < std::min(k0, n_qubits + 1); ++k) s.by_weight_[k] = 1.0;
  return s;
}

PenaltySchedule PenaltySchedule::table(int n_qubits,
                                       std::vector<double> by_weight) {
  if (by_weight.size() != static_cast<std::size_t>(n_qubits) + 1) {
    throw std::invalid_argument("table schedule needs N + 1 weight entries");
  }
  for (double v : by_weight) check_penalty(v);
  if (by_weight[0] != 1.0) {
    throw std::invalid_argument("weight-0 penalty must be 1");
  }
  PenaltySchedule s(Kind::kTable, n_qubits);
  s.by_weight_ = std::move(by_weight);
  return s;
}

PenaltySchedule PenaltySchedule::explicit_map(
    int n_qubits, std::map<PauliString, double> penalties) {
  if (n_qubits > kEnumerationCap) {
    throw std::invalid_argument("explicit schedules capped at " +
                                std::to_string(kEnumerationCap) + " qubits");
  }
  for (const auto& [p, v] : penalties) {
    if (p.n_qubits != n_qubits) {
      throw std::invalid_argument("explicit penalty key has wrong qubit count");
    }
    check_penalty(v);
    if (p.is_identity() && v != 1.0) {
      throw std::invalid_argument("identity penalty must be 1");
    }
  }
  PenaltySchedule s(Kind::kExplicit, n_qubits);
  s.explicit_ = std::move(penalties);
  return s;
}

double PenaltySchedule::penalty(const PauliString& p) const {
  if (p.n_qubits != n_qubits_) {
    throw std::invalid_argument("schedule/string qubit-count mismatch");
  }
  if (kind_ == Kind::kExplicit) {
    const auto it = explicit_.find(p);
    return it == explicit_.end() ? 1.0 : it->second;
  }
  return by_weight_[static_cast<std::size_t>(p.weight())];
}

double PenaltySchedule::penalty_for_weight(int k) const {
  if (kind_ == Kind::kExplicit) {
    throw std::logic_error("explicit schedules are not weight-dependent");
  }
  if (k < 0 || k > n_qubits_) {
    throw std::invalid_argument("weight out of range");
  }
  return by_weight_[static_cast<std::size_t>(k)];
}

std::uint64_t PenaltySchedule::count_cheap(double threshold) const {
  if (kind_ == Kind::kExplicit) {
    std::uint64_t count = 0;
    for (const PauliString& p : enumerate_paulis(n_qubits_)) {
      if (penalty(p) <= threshold) ++count;
    }
    return count;
  }
  std::uint64_t count = 0;
  for (int k = 0; k <= n_qubits_; ++k) {
    if (by_weight_[static_cast<std::size_t>(k)] <= threshold) {
      count += pauli_count_weight(n_qubits_, k);
    }
  }
  return count;
}

double PenaltySchedule::harmonic_tail(double threshold) const {
  if (kind_ == Kind::kExplicit) {
    double sum = 0.0;
    for (const PauliString& p : enumerate_paulis(n_qubits_)) {
      const double v = penalty(p);
      if (v > threshold) sum += 1.0 / v;
    }
    return sum;
  }
  double sum = 0.0;
  for (int k = 0; k <= n_qubits_; ++k) {
    const double v = by_weight_[static_cast<std::size_t>(k)];
    if (v > threshold) {
      sum += static_cast<double>(pauli_count_weight(n_qubits_, k)) / v;
    }
  }
  return sum;
}

double PenaltySchedule::harmonic_total() const { return harmonic_tail(0.0); }

double PenaltySchedule::max_penalty() const {
  const std::vector<double> values = distinct_penalties();
  return values.back();
}

double PenaltySchedule::min_penalty() const {
  return distinct_penalties().front();
}

std::vector<double> PenaltySchedule::distinct_penalties() const {
  std::vector<double> values;
  if (kind_ == Kind::kExplicit) {
    values.push_back(1.0);  // unlisted strings
    for (const auto& [p, v] : explicit_) values.push_back(v);
  } else {
    values = by_weight_;
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

}  // namespace cgeo
