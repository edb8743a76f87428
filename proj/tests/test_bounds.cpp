#include <cmath>

#include "doctest.h"

#include "cgeo/bounds.hpp"
#include "cgeo/path.hpp"
#include "cgeo/rng.hpp"

using namespace cgeo;

TEST_CASE("killing gate bound reproduces the worked numbers") {
  BoundQuery q{PenaltySchedule::cliff(4, 1e6), 10.0, 0.1};
  const GateBound b = gate_bound_killing(q);
  CHECK(b.threshold == doctest::Approx(40000.0));
  CHECK(b.n_cheap == 67);
  CHECK(b.formula ==
        doctest::Approx(6.0 * M_PI * 4.0 * std::pow(67.0, 1.5) * 1000.0));
  CHECK(b.trivial_cap == doctest::Approx(16.0 * 256.0));
  CHECK(b.bound == std::min(b.formula, b.trivial_cap));

  // Threshold above every penalty counts all directions.
  BoundQuery wide{PenaltySchedule::cliff(3, 2.0), 10.0, 0.1};
  CHECK(gate_bound_killing(wide).n_cheap == 64);
  CHECK(gate_bound_killing(wide).trivial_cap == doctest::Approx(9.0 * 64.0));
}

TEST_CASE("killing gate bound is monotone in length and error") {
  const PenaltySchedule s = PenaltySchedule::binomial(4, 1.0);
  double prev = 0.0;
  for (double length : {1.0, 2.0, 4.0, 8.0}) {
    const double bound = gate_bound_killing({s, length, 0.2}).formula;
    CHECK(bound >= prev);
    prev = bound;
  }
  prev = 1e300;
  for (double err : {0.05, 0.1, 0.2, 0.4}) {
    const double bound = gate_bound_killing({s, 4.0, err}).formula;
    CHECK(bound <= prev);
    prev = bound;
  }
}

TEST_CASE("operator gate bound picks the cheaper variant") {
  // Hard cliff: the tail vanishes at threshold 1 already, but the
  // dimension-factor variant reaches the same count, so it wins the tie.
  BoundQuery cliff_q{PenaltySchedule::cliff(3, std::pow(16.0, 3)), 1.0, 0.5};
  const GateBound cb = gate_bound_op(cliff_q);
  CHECK(cb.variant == "2N");
  CHECK(cb.n_cheap == 37);  // weight <= 2 at N=3: 1 + 9 + 27

  BoundQuery bin_q{PenaltySchedule::binomial(4, 2.0), 2.0, 0.5};
  const GateBound bb = gate_bound_op(bin_q);
  // Whatever variant wins, it is the smaller of the two formulas.
  const double tail_formula = [&] {
    const double target = 0.25 / 16.0;
    for (double v : bin_q.schedule.distinct_penalties()) {
      if (v >= bin_q.schedule.max_penalty()) break;
      if (bin_q.schedule.harmonic_tail(v) <= target) {
        const auto n = static_cast<double>(bin_q.schedule.count_cheap(v));
        return 12.0 * 4.0 * n * n * 4.0 / 0.5;
      }
    }
    return 1e300;
  }();
  const double thr2 = 16.0 * 4.0 * 4.0 / 0.25;
  const auto n2 = static_cast<double>(bin_q.schedule.count_cheap(thr2));
  const double dim_formula = 12.0 * 4.0 * n2 * n2 * 4.0 / 0.5;
  CHECK(bb.formula == doctest::Approx(std::min(tail_formula, dim_formula)));

  // Error at least the diameter of the norm ball needs no gates.
  CHECK(gate_bound_op({PenaltySchedule::binomial(3, 1.0), 1.0, 2.5}).bound ==
        0.0);
  CHECK(state_gate_bound(bin_q).bound == doctest::Approx(bb.bound));
}

TEST_CASE("unitary diameter bound simplifications") {
  for (int n : {4, 8}) {
    const double cliff_pen = std::pow(4.0, n);
    const DiameterBound cliff =
        diameter_lowerbound_unitary(PenaltySchedule::cliff(n, cliff_pen));
    CHECK(cliff.simplified ==
          doctest::Approx(std::min(std::pow(2.0, n), std::sqrt(cliff_pen))));

    const double alpha = 2.0;
    const DiameterBound bin =
        diameter_lowerbound_unitary(PenaltySchedule::binomial(n, alpha));
    CHECK(bin.simplified ==
          doctest::Approx(std::pow(std::pow(2.0, n),
                                   2.0 * alpha / (3.0 + 2.0 * alpha))));

    const DiameterBound ex =
        diameter_lowerbound_unitary(PenaltySchedule::exponential(n, 2.0));
    // x^k at the smallest k with N_k^{3/2} x^{2k} >= 4^N.
    int k_bar = n;
    for (int k = 1; k <= n; ++k) {
      if (std::pow(static_cast<double>(pauli_count_weight(n, k)), 1.5) *
              std::pow(2.0, 2 * k) >=
          std::pow(4.0, n)) {
        k_bar = k;
        break;
      }
    }
    CHECK(ex.simplified == doctest::Approx(std::pow(2.0, k_bar)));

    CHECK(cliff.raw > 0.0);
    CHECK(bin.raw > 0.0);
  }

  // The bi-invariant metric has order-one diameter.
  const DiameterBound flat =
      diameter_lowerbound_unitary(PenaltySchedule::table(4, {1, 1, 1, 1, 1}));
  CHECK(flat.raw <= 1.0);
}

TEST_CASE("state diameter bound simplifications") {
  for (int n : {4, 8}) {
    const double cliff_pen = std::pow(4.0, n);
    const DiameterBound cliff =
        diameter_lowerbound_state(PenaltySchedule::cliff(n, cliff_pen));
    const double root = std::pow(2.0, 0.5 * n);
    CHECK(cliff.simplified ==
          doctest::Approx(std::min(root, std::sqrt(cliff_pen) / root)));

    const DiameterBound bin =
        diameter_lowerbound_state(PenaltySchedule::binomial(n, 3.0));
    CHECK(bin.simplified == doctest::Approx(std::pow(root, 0.5)));

    const DiameterBound ex =
        diameter_lowerbound_state(PenaltySchedule::exponential(n, 4.0));
    CHECK(ex.raw > 0.0);
    CHECK(ex.simplified > 0.0);
  }
}

TEST_CASE("operator norm versus complexity length sandwich coefficients") {
  const SandwichCoeffs flat =
      op_vs_complexity_sandwich(PenaltySchedule::table(2, {1, 1, 1}));
  CHECK(flat.upper_coeff == doctest::Approx(4.0));
  CHECK(flat.lower_coeff == doctest::Approx(2.0 / M_PI));

  const SandwichCoeffs bin =
      op_vs_complexity_sandwich(PenaltySchedule::binomial(2, 1.0));
  CHECK(bin.upper_coeff == doctest::Approx(std::sqrt(3.0)));

  const SandwichCoeffs cliff =
      op_vs_complexity_sandwich(PenaltySchedule::cliff(3, 1e12));
  // 37 directions of penalty 1 dominate the harmonic sum.
  CHECK(cliff.upper_coeff == doctest::Approx(std::sqrt(37.0)).epsilon(1e-5));
}

TEST_CASE("evolved paths respect the sandwich upper bound") {
  Rng rng(149);
  const PenaltySchedule s = PenaltySchedule::binomial(3, 1.0);
  const SandwichCoeffs coeffs = op_vs_complexity_sandwich(s);
  for (int trial = 0; trial < 50; ++trial) {
    Path p(3);
    p.segments.push_back(PathSegment{rng.next_uniform(0.05, 0.5),
                                     random_unit_hamiltonian(rng, 3)});
    const double lhs = op_distance(evolve(p), DenseMatrix::Identity(8, 8));
    REQUIRE(lhs <= coeffs.upper_coeff * complexity_length(p, s) + 1e-8);
  }
}
