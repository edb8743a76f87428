#include <cmath>

#include "doctest.h"

#include "cgeo/compile.hpp"
#include "cgeo/rng.hpp"
#include "oracles.hpp"

using namespace cgeo;

TEST_CASE("pruning keeps only cheap terms") {
  const PenaltySchedule s = PenaltySchedule::cliff(4, 100.0);
  Hamiltonian h(4);
  h.add(PauliString::parse("XZII"), 0.5);
  h.add(PauliString::parse("XYZI"), 0.4);
  const Hamiltonian kept = prune(h, s, 10.0);
  CHECK(kept.coeff(PauliString::parse("XZII")) == 0.5);
  CHECK(kept.coeff(PauliString::parse("XYZI")) == 0.0);

  const Hamiltonian all = prune(h, s, s.max_penalty());
  CHECK(all.terms == h.terms);
}

TEST_CASE("pruned mass obeys the difficulty bound") {
  Rng rng(97);
  const PenaltySchedule s = PenaltySchedule::binomial(4, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Hamiltonian h = random_unit_hamiltonian(rng, 4);
    const double gamma = difficulty(h, s).gamma;
    for (double thr : {10.0, 100.0, 1000.0}) {
      const Hamiltonian kept = prune(h, s, thr);
      double dropped = 0.0;
      for (const auto& [p, c] : h.terms) {
        if (kept.coeff(p) == 0.0) dropped += c * c;
      }
      REQUIRE(dropped <= gamma * gamma / thr + 1e-12);
    }
  }
}

TEST_CASE("window averages of constant paths are exact") {
  Rng rng(101);
  const Hamiltonian h = random_unit_hamiltonian(rng, 3);
  Path p(3);
  p.segments.push_back(PathSegment{1.0, h});
  for (const PathSegment& w : segment_average(p, 0.3)) {
    for (const auto& [pauli, c] : h.terms) {
      REQUIRE(w.h.coeff(pauli) == doctest::Approx(c).epsilon(1e-12));
    }
  }
}

TEST_CASE("one window averages two equal halves") {
  Rng rng(103);
  const Hamiltonian h1 = random_unit_hamiltonian(rng, 2);
  const Hamiltonian h2 = random_unit_hamiltonian(rng, 2);
  Path p(2);
  p.segments.push_back(PathSegment{0.5, h1});
  p.segments.push_back(PathSegment{0.5, h2});
  const auto windows = segment_average(p, 1.0);
  REQUIRE(windows.size() == 1);
  for (const auto& [pauli, c] : windows[0].h.terms) {
    REQUIRE(c == doctest::Approx(0.5 * (h1.coeff(pauli) + h2.coeff(pauli))));
  }
}

TEST_CASE("per-window averaging error is quadratic in the window size") {
  Rng rng(107);
  const double delta = 0.05;
  Path p(4);
  for (int s = 0; s < 4; ++s) {
    p.segments.push_back(PathSegment{0.04 + 0.03 * s,
                                     random_unit_hamiltonian(rng, 4)});
  }
  const auto windows = segment_average(p, delta);
  double start = 0.0;
  for (const PathSegment& w : windows) {
    // Exact evolution restricted to this window.
    Path piece(4);
    double t = 0.0;
    for (const PathSegment& seg : p.segments) {
      const double lo = std::max(start, t);
      const double hi = std::min(start + w.duration, t + seg.duration);
      if (hi > lo) piece.segments.push_back(PathSegment{hi - lo, seg.h});
      t += seg.duration;
    }
    Path averaged(4);
    averaged.segments.push_back(w);
    const double n_dirs = static_cast<double>(w.h.terms.size());
    REQUIRE(fbar_distance(evolve(piece), evolve(averaged)) <=
            2.0 * std::sqrt(n_dirs) * w.duration * w.duration);
    start += w.duration;
  }
}

TEST_CASE("trotter ordering leading error") {
  Hamiltonian commuting(3);
  commuting.add(PauliString::parse("ZII"), 0.5);
  commuting.add(PauliString::parse("IZI"), 0.3);
  commuting.add(PauliString::parse("ZZZ"), 0.2);
  CHECK(trotter_order_greedy(commuting).leading_error_fbar_sq == 0.0);
  CHECK(trotter_order_naive(commuting).leading_error_fbar_sq == 0.0);

  Hamiltonian pair(2);
  pair.add(PauliString::parse("XI"), 0.8);
  pair.add(PauliString::parse("ZI"), 0.6);
  const double expect = 0.8 * 0.8 * 0.6 * 0.6;
  CHECK(trotter_order_greedy(pair).leading_error_fbar_sq ==
        doctest::Approx(expect));
  CHECK(trotter_order_naive(pair).leading_error_fbar_sq ==
        doctest::Approx(expect));
  CHECK(pairwise_sq_bound(pair) == doctest::Approx(expect));
}

TEST_CASE("greedy ordering beats the pairwise bound on random input") {
  Rng rng(109);
  const auto paulis = enumerate_paulis(4);
  for (int trial = 0; trial < 20; ++trial) {
    Hamiltonian h(4);
    while (h.terms.size() < 50) {
      const PauliString p = paulis[rng.next_u64() % paulis.size()];
      if (p.is_identity() || h.terms.count(p)) continue;
      h.add(p, rng.next_normal());
    }
    h *= 1.0 / h.norm_fbar();
    const OrderedTerms greedy = trotter_order_greedy(h);
    const double bound = pairwise_sq_bound(h);
    REQUIRE(greedy.leading_error_fbar_sq <= bound + 1e-12);
    REQUIRE(bound <= 0.5 + 1e-12);  // (sum h^2)^2 / 2 at unit norm
    REQUIRE(greedy.terms.size() == 50);
  }
}

TEST_CASE("monomial synthesis gate counts and exactness") {
  CHECK(synthesize_monomial(PauliString::parse("XII"), 0.4).gate_count() == 1);
  CHECK(synthesize_monomial(PauliString::parse("XYIII"), 0.4).gate_count() == 1);
  CHECK(synthesize_monomial(PauliString::parse("XYZXY"), 0.4).gate_count() == 7);

  const Circuit none = synthesize_monomial(PauliString::parse("III"), 0.7);
  CHECK(none.gate_count() == 0);
  CHECK((circuit_to_dense(none) -
         std::polar(1.0, 0.7) * DenseMatrix::Identity(8, 8))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  Rng rng(113);
  const auto paulis = enumerate_paulis(4);
  for (int trial = 0; trial < 60; ++trial) {
    PauliString p = paulis[rng.next_u64() % paulis.size()];
    if (p.is_identity()) p = p.with_letter(2, 3);
    const double angle = rng.next_uniform(-3.0, 3.0);
    const Circuit c = synthesize_monomial(p, angle);
    const int k = p.weight();
    REQUIRE(c.gate_count() == static_cast<std::size_t>(k <= 2 ? 1 : 2 * k - 3));
    REQUIRE(op_distance(circuit_to_dense(c),
                        oracles::expm_taylor(dense(p), angle)) < 1e-9);
  }
}

TEST_CASE("circuit embedding conventions") {
  CHECK(circuit_to_dense(Circuit(2)) == DenseMatrix::Identity(4, 4));

  // Single gate on (0, 1) at N=2 is the block itself.
  Rng rng(127);
  Circuit c(2);
  TwoLocalGate g;
  g.qubit_a = 0;
  g.qubit_b = 1;
  const DenseMatrix u = random_unitary(rng, 2);
  g.block = u;
  c.gates.push_back(g);
  CHECK((circuit_to_dense(c) - u).cwiseAbs().maxCoeff() < 1e-12);

  // Swapping the qubit order permutes the block basis accordingly.
  Circuit c2(2);
  TwoLocalGate g2;
  g2.qubit_a = 1;
  g2.qubit_b = 0;
  g2.block = u;
  c2.gates.push_back(g2);
  DenseMatrix swapped(4, 4);
  const int perm[4] = {0, 2, 1, 3};
  for (int r = 0; r < 4; ++r)
    for (int col = 0; col < 4; ++col)
      swapped(perm[r], perm[col]) = u(r, col);
  CHECK((circuit_to_dense(c2) - swapped).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("compile keeps cheap paths untouched and within budget") {
  Rng rng(131);
  Path p(3);
  Hamiltonian h(3);
  h.add(PauliString::parse("XZI"), 0.6);
  h.add(PauliString::parse("IYZ"), 0.8);
  p.segments.push_back(PathSegment{0.9, h});
  const PenaltySchedule s = PenaltySchedule::cliff(3, 1e4);
  CompileBudget budget;
  budget.target_error = 0.3;
  const auto [circuit, report] = compile(p, s, budget);
  CHECK(report.measured_error_killing <= 0.3);
  CHECK(report.threshold_variant == "killing");
  CHECK(report.gate_count <= report.predicted_gate_bound);
  CHECK(report.gate_count > 0);
  // Nothing is 3-local, so pruning drops no mass and the evolved pruned
  // path is exact up to averaging and Trotter error.
  CHECK(report.measured_error_killing <= report.predicted_error_bound + 1e-9);
}

TEST_CASE("compile reports infeasible operator-norm budgets") {
  Rng rng(137);
  Path p(3);
  p.segments.push_back(PathSegment{1.0, random_unit_hamiltonian(rng, 3)});
  // Soft schedule: every tail stays fat, and the fallback threshold
  // overshoots the maximum penalty for a tiny budget.
  const PenaltySchedule soft = PenaltySchedule::binomial(3, 0.25);
  CompileBudget budget;
  budget.target_error = 1e-3;
  budget.error_norm = ErrorNorm::kOp;
  CHECK_THROWS_AS(compile(p, soft, budget), InfeasibleBudget);
}

TEST_CASE("compile meets an operator-norm budget with a tail threshold") {
  Rng rng(139);
  const PenaltySchedule s = PenaltySchedule::binomial(3, 2.0);
  const Hamiltonian h = random_unit_hamiltonian(rng, 3);
  Path p(3);
  // Duration chosen so the complexity length is 2.
  p.segments.push_back(PathSegment{2.0 / difficulty(h, s).gamma, h});
  CompileBudget budget;
  budget.target_error = 0.8;
  budget.error_norm = ErrorNorm::kOp;
  const auto [circuit, report] = compile(p, s, budget);
  CHECK(report.measured_error_op <= 0.8);
  CHECK((report.threshold_variant == "tail" ||
         report.threshold_variant == "2N"));
}
