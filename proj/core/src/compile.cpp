#include "cgeo/compile.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <map>

namespace cgeo {

namespace {

using complex = std::complex<double>;

const Eigen::Matrix2cd& pauli2(int letter) {
  static const Eigen::Matrix2cd kMats[4] = {
      (Eigen::Matrix2cd() << 1, 0, 0, 1).finished(),
      (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(),
      (Eigen::Matrix2cd() << 0, complex(0, -1), complex(0, 1), 0).finished(),
      (Eigen::Matrix2cd() << 1, 0, 0, -1).finished(),
  };
  return kMats[letter];
}

// e^{i theta (A on qubit_a) x (B on qubit_b)} as a gate block.  The block's
// basis index is bit(qubit_a) + 2 * bit(qubit_b), so the operator matrix is
// kron(B, A).
TwoLocalGate pauli_rotation(int qubit_a, int qubit_b, int letter_a,
                            int letter_b, double theta) {
  Eigen::Matrix4cd op;
  const Eigen::Matrix2cd& a = pauli2(letter_a);
  const Eigen::Matrix2cd& b = pauli2(letter_b);
  for (int rb = 0; rb < 2; ++rb)
    for (int ra = 0; ra < 2; ++ra)
      for (int cb = 0; cb < 2; ++cb)
        for (int ca = 0; ca < 2; ++ca)
          op(ra + 2 * rb, ca + 2 * cb) = b(rb, cb) * a(ra, ca);
  TwoLocalGate g;
  g.qubit_a = qubit_a;
  g.qubit_b = qubit_b;
  g.block = std::cos(theta) * Eigen::Matrix4cd::Identity() +
            complex(0, std::sin(theta)) * op;
  return g;
}

void apply_gate(DenseMatrix& u, const TwoLocalGate& g) {
  const std::uint64_t bit_a = std::uint64_t{1} << g.qubit_a;
  const std::uint64_t bit_b = std::uint64_t{1} << g.qubit_b;
  const auto dim = static_cast<std::uint64_t>(u.rows());
  for (Eigen::Index col = 0; col < u.cols(); ++col) {
    for (std::uint64_t base = 0; base < dim; ++base) {
      if (base & (bit_a | bit_b)) continue;
      const Eigen::Index row[4] = {
          static_cast<Eigen::Index>(base),
          static_cast<Eigen::Index>(base | bit_a),
          static_cast<Eigen::Index>(base | bit_b),
          static_cast<Eigen::Index>(base | bit_a | bit_b)};
      complex v[4];
      for (int i = 0; i < 4; ++i) v[i] = u(row[i], col);
      for (int i = 0; i < 4; ++i) {
        complex acc = 0;
        for (int k = 0; k < 4; ++k) acc += g.block(i, k) * v[k];
        u(row[i], col) = acc;
      }
    }
  }
}

}  // namespace

DenseMatrix circuit_to_dense(const Circuit& c) {
  if (c.n_qubits > kMaxDenseQubits) {
    throw std::invalid_argument("dense operations capped at " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits;
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  for (const TwoLocalGate& g : c.gates) {
    if (g.qubit_a == g.qubit_b || g.qubit_a < 0 || g.qubit_b < 0 ||
        g.qubit_a >= c.n_qubits || g.qubit_b >= c.n_qubits) {
      throw std::invalid_argument("gate qubit pair out of range");
    }
    apply_gate(u, g);
  }
  return c.global_phase * u;
}

Hamiltonian prune(const Hamiltonian& h, const PenaltySchedule& s,
                  double threshold) {
  if (threshold < 1.0) {
    throw std::invalid_argument("pruning threshold must be >= 1");
  }
  Hamiltonian out(h.n_qubits);
  for (const auto& [p, c] : h.terms) {
    if (s.penalty(p) <= threshold) out.add(p, c);
  }
  return out;
}

std::vector<PathSegment> segment_average(const Path& p, double delta) {
  const double total = p.total_duration();
  if (!(delta > 0.0) || delta > total) {
    throw std::invalid_argument("need 0 < delta <= total duration");
  }
  const auto windows = static_cast<std::size_t>(std::ceil(total / delta));
  std::vector<PathSegment> out;
  out.reserve(windows);

  std::size_t seg = 0;
  double seg_start = 0.0;
  for (std::size_t w = 0; w < windows; ++w) {
    const double w_start = static_cast<double>(w) * delta;
    const double w_end = std::min(w_start + delta, total);
    Hamiltonian avg(p.n_qubits);
    // Accumulate duration-weighted overlap with each path segment.
    while (seg < p.segments.size()) {
      const double seg_end = seg_start + p.segments[seg].duration;
      const double lo = std::max(w_start, seg_start);
      const double hi = std::min(w_end, seg_end);
      if (hi > lo) {
        Hamiltonian part = p.segments[seg].h;
        part *= (hi - lo);
        avg += part;
      }
      if (seg_end <= w_end + 1e-15 * total) {
        ++seg;
        seg_start = seg_end;
      } else {
        break;
      }
    }
    const double w_len = w_end - w_start;
    avg *= 1.0 / w_len;
    out.push_back(PathSegment{w_len, std::move(avg)});
  }
  return out;
}

namespace {

// Leading Trotter error operator (1/2) sum_{I before J} h_I h_J [s_I, s_J],
// stored as real coefficients e with E = i sum_P e_P s_P.
using ErrorMap = std::map<PauliString, double>;

double map_norm_sq(const ErrorMap& m) {
  double sum = 0.0;
  for (const auto& [p, v] : m) sum += v * v;
  return sum;
}

// Contribution of placing `t` after every already placed term:
// (1/2) sum_p h_p h_t [s_p, s_t].  [s_p, s_t] = c s with c = +-2i, so the
// real coefficient is +- h_p h_t.
ErrorMap back_contribution(
    const std::vector<std::pair<PauliString, double>>& placed,
    const PauliString& t, double h_t) {
  ErrorMap delta;
  for (const auto& [p, h_p] : placed) {
    const auto c = commutator(p, t);
    if (!c) continue;
    delta[c->pauli] += 0.5 * h_p * h_t * c->coefficient.imag();
  }
  return delta;
}

}  // namespace

OrderedTerms trotter_order_greedy(const Hamiltonian& h) {
  std::vector<std::pair<PauliString, double>> pending(h.terms.begin(),
                                                      h.terms.end());
  std::stable_sort(pending.begin(), pending.end(),
                   [](const auto& a, const auto& b) {
                     return std::abs(a.second) > std::abs(b.second);
                   });

  std::deque<std::pair<PauliString, double>> order;
  std::vector<std::pair<PauliString, double>> placed;
  ErrorMap error;
  for (const auto& [t, h_t] : pending) {
    const ErrorMap delta = back_contribution(placed, t, h_t);
    // ||E + s D||^2 = ||E||^2 + 2 s <E, D> + ||D||^2; front placement flips
    // every ordered pair involving t, so s = -1 there.
    double inner = 0.0;
    for (const auto& [p, v] : delta) {
      const auto it = error.find(p);
      if (it != error.end()) inner += it->second * v;
    }
    const double sign = inner > 0.0 ? -1.0 : 1.0;
    for (const auto& [p, v] : delta) {
      error[p] += sign * v;
      if (error[p] == 0.0) error.erase(p);
    }
    if (sign > 0.0) {
      order.emplace_back(t, h_t);
    } else {
      order.emplace_front(t, h_t);
    }
    placed.emplace_back(t, h_t);
  }

  OrderedTerms out;
  out.terms.assign(order.begin(), order.end());
  out.leading_error_fbar_sq = map_norm_sq(error);
  return out;
}

OrderedTerms trotter_order_naive(const Hamiltonian& h) {
  OrderedTerms out;
  out.terms.assign(h.terms.begin(), h.terms.end());
  ErrorMap error;
  std::vector<std::pair<PauliString, double>> placed;
  for (const auto& [t, h_t] : out.terms) {
    for (const auto& [p, v] : back_contribution(placed, t, h_t)) {
      error[p] += v;
    }
    placed.emplace_back(t, h_t);
  }
  out.leading_error_fbar_sq = map_norm_sq(error);
  return out;
}

double pairwise_sq_bound(const Hamiltonian& h) {
  double s1 = 0.0, s2 = 0.0;
  for (const auto& [p, c] : h.terms) {
    s1 += c * c;
    s2 += c * c * c * c;
  }
  return 0.5 * (s1 * s1 - s2);
}

namespace {

constexpr double kQuarterTurn = M_PI / 4.0;

// Next letter in the x -> y -> z -> x cycle.
int cycle_letter(int letter) { return letter % 3 + 1; }

void synthesize_into(const PauliString& p, double angle, Circuit& c) {
  const int k = p.weight();
  std::vector<int> support;
  for (int q = 0; q < p.n_qubits; ++q) {
    if (p.letter(q) != 0) support.push_back(q);
  }
  if (k == 1) {
    const int q = support[0];
    const int partner = (q + 1) % p.n_qubits;
    c.gates.push_back(pauli_rotation(q, partner, p.letter(q), 0, angle));
    return;
  }
  if (k == 2) {
    c.gates.push_back(pauli_rotation(support[0], support[1],
                                     p.letter(support[0]),
                                     p.letter(support[1]), angle));
    return;
  }
  // Peel off the first support qubit: with G = a1 on q1, g2 on q2 and
  // P' = p with q1 -> I, q2 -> b2 (b2 the cycled letter, g2 the remaining
  // one), G anticommutes with P' and p = i G P', so
  // e^{i p angle} = e^{i G pi/4} e^{i P' angle} e^{-i G pi/4}.
  const int q1 = support[0];
  const int q2 = support[1];
  const int a1 = p.letter(q1);
  const int a2 = p.letter(q2);
  const int b2 = cycle_letter(a2);
  const int g2 = cycle_letter(b2);
  const PauliString inner = p.with_letter(q1, 0).with_letter(q2, b2);
  c.gates.push_back(pauli_rotation(q1, q2, a1, g2, -kQuarterTurn));
  synthesize_into(inner, angle, c);
  c.gates.push_back(pauli_rotation(q1, q2, a1, g2, kQuarterTurn));
}

}  // namespace

Circuit synthesize_monomial(const PauliString& p, double angle) {
  if (p.n_qubits < 2) {
    throw std::invalid_argument("synthesis needs at least 2 qubits");
  }
  Circuit c(p.n_qubits);
  if (p.is_identity()) {
    c.global_phase = std::polar(1.0, angle);
    return c;
  }
  synthesize_into(p, angle, c);
  return c;
}

namespace {

struct BudgetPlan {
  double threshold = 0.0;
  std::string variant;
  double delta = 0.0;
  std::uint64_t n_cheap = 0;
};

BudgetPlan plan_budget(const PenaltySchedule& s, double target, ErrorNorm norm,
                       double length, double killing_total, double gamma_min) {
  const int n = s.n_qubits();
  const double max_pen = s.max_penalty();
  BudgetPlan plan;
  if (norm == ErrorNorm::kKilling) {
    plan.threshold = std::clamp(4.0 * length * length / (target * target), 1.0,
                                max_pen);
    plan.variant = "killing";
  } else {
    // Half the budget goes to pruning; the operator-norm pruning error is
    // length * min(sqrt(tail), 2^{N/2}/sqrt(threshold)).
    const double tail_target = target * target / (4.0 * length * length);
    bool found = false;
    for (double v : s.distinct_penalties()) {
      if (v >= max_pen) break;
      if (s.harmonic_tail(v) <= tail_target) {
        plan.threshold = v;
        plan.variant = "tail";
        found = true;
        break;
      }
    }
    if (!found) {
      const double fallback = std::max(
          std::pow(2.0, n) * 4.0 * length * length / (target * target), 1.0);
      if (fallback >= max_pen) {
        throw InfeasibleBudget(
            "no pruning threshold satisfies the harmonic-tail condition "
            "sum 1/penalty <= error^2 / (4 L^2), and the dimension-factor "
            "fallback threshold 2^N 4 L^2 / error^2 exceeds the maximum "
            "penalty");
      }
      plan.threshold = fallback;
      plan.variant = "2N";
    }
  }
  plan.n_cheap = s.count_cheap(plan.threshold);
  const double n_cheap = static_cast<double>(plan.n_cheap);
  const double window =
      norm == ErrorNorm::kKilling
          ? gamma_min * target / (3.0 * M_PI * std::sqrt(n_cheap) * length)
          : gamma_min * target / (6.0 * n_cheap * length);
  plan.delta = std::min({window, 1.0 / std::sqrt(n_cheap), killing_total}) *
               (1.0 - 1e-12);
  return plan;
}

}  // namespace

std::pair<Circuit, CompileReport> compile(const Path& p,
                                          const PenaltySchedule& s,
                                          const CompileBudget& budget) {
  if (p.n_qubits != s.n_qubits()) {
    throw std::invalid_argument("path/schedule qubit-count mismatch");
  }
  if (p.segments.empty()) {
    throw std::invalid_argument("cannot compile an empty path");
  }
  if (!(budget.target_error > 0.0)) {
    throw std::invalid_argument("target error must be positive");
  }
  double gamma_min = 0.0;
  for (std::size_t i = 0; i < p.segments.size(); ++i) {
    const double g = difficulty(p.segments[i].h, s).gamma;
    gamma_min = i == 0 ? g : std::min(gamma_min, g);
  }

  const double length = complexity_length(p, s);
  const double killing_total = killing_length(p);
  const BudgetPlan plan = plan_budget(s, budget.target_error, budget.error_norm,
                                      length, killing_total, gamma_min);

  Path pruned(p.n_qubits);
  pruned.global_phase = p.global_phase;
  for (const PathSegment& seg : p.segments) {
    pruned.segments.push_back(
        PathSegment{seg.duration, prune(seg.h, s, plan.threshold)});
  }

  const std::vector<PathSegment> windows = segment_average(pruned, plan.delta);

  Circuit circuit(p.n_qubits);
  circuit.global_phase = std::polar(1.0, p.global_phase);
  for (const PathSegment& w : windows) {
    const OrderedTerms order = budget.greedy_order
                                   ? trotter_order_greedy(w.h)
                                   : trotter_order_naive(w.h);
    for (const auto& [pauli, coeff] : order.terms) {
      const Circuit mono = synthesize_monomial(pauli, coeff * w.duration);
      circuit.global_phase *= mono.global_phase;
      circuit.gates.insert(circuit.gates.end(), mono.gates.begin(),
                           mono.gates.end());
    }
  }

  CompileReport report;
  report.gate_count = circuit.gate_count();
  report.segment_count = windows.size();
  report.delta = plan.delta;
  report.threshold = plan.threshold;
  report.n_cheap = plan.n_cheap;
  report.threshold_variant = plan.variant;
  report.complexity_length = length;
  report.killing_length = killing_total;
  report.predicted_gate_bound = 2.0 * p.n_qubits *
                                static_cast<double>(windows.size()) *
                                static_cast<double>(plan.n_cheap);

  const double n_cheap = static_cast<double>(plan.n_cheap);
  const double tail = s.harmonic_tail(plan.threshold);
  if (budget.error_norm == ErrorNorm::kKilling) {
    const double prune_term =
        tail == 0.0 ? 0.0 : length / std::sqrt(plan.threshold);
    report.predicted_error_bound =
        prune_term + 1.5 * M_PI * std::sqrt(n_cheap) * plan.delta * length /
                         gamma_min;
  } else {
    const double prune_term =
        length * std::min(std::sqrt(tail),
                          std::pow(2.0, p.n_qubits / 2.0) /
                              std::sqrt(plan.threshold));
    report.predicted_error_bound =
        prune_term + 3.0 * n_cheap * plan.delta * length / gamma_min;
  }

  if (p.n_qubits <= kMaxDenseQubits) {
    const DenseMatrix target = evolve(p);
    const DenseMatrix built = circuit_to_dense(circuit);
    report.measured_error_killing = killing_distance(target, built);
    report.measured_error_fbar = fbar_distance(target, built);
    report.measured_error_op = op_distance(target, built);
  }
  return {std::move(circuit), report};
}

}  // namespace cgeo
