#include <cmath>

#include "doctest.h"

#include "cgeo/path.hpp"
#include "cgeo/rng.hpp"
#include "oracles.hpp"

using namespace cgeo;

TEST_CASE("normalize rescales durations to preserve the unitary") {
  Path p(1);
  Hamiltonian h(1);
  h.add(PauliString::parse("X"), 2.0);
  p.segments.push_back(PathSegment{1.0, h});
  const Path q = normalize(p);
  REQUIRE(q.segments.size() == 1);
  CHECK(q.segments[0].duration == doctest::Approx(2.0));
  CHECK(q.segments[0].h.coeff(PauliString::parse("X")) == doctest::Approx(1.0));
  CHECK((evolve(p) - evolve(q)).cwiseAbs().maxCoeff() < 1e-12);

  CHECK(normalize(q).segments[0].duration == doctest::Approx(2.0));

  Path zero(1);
  zero.segments.push_back(PathSegment{1.0, Hamiltonian(1)});
  CHECK_THROWS_AS(normalize(zero), std::invalid_argument);
}

TEST_CASE("normalize moves identity components into the global phase") {
  Path p(2);
  Hamiltonian h(2);
  h.add(PauliString::parse("II"), 0.3);
  h.add(PauliString::parse("XZ"), 0.7);
  p.segments.push_back(PathSegment{1.2, h});
  const Path q = normalize(p);
  CHECK(q.global_phase == doctest::Approx(0.36));
  CHECK(q.segments[0].h.coeff(PauliString::parse("II")) == 0.0);
  CHECK((evolve(p) - evolve(q)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("normalized random paths evolve identically") {
  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    Path p(2);
    for (int s = 0; s < 3; ++s) {
      Hamiltonian h = random_unit_hamiltonian(rng, 2);
      h *= rng.next_uniform(0.2, 3.0);
      p.segments.push_back(PathSegment{rng.next_uniform(0.1, 0.8), h});
    }
    REQUIRE((evolve(p) - evolve(normalize(p))).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("lengths under penalty schedules") {
  Path p(4);
  Hamiltonian h(4);
  h.add(PauliString::parse("XIII"), 1.0);
  p.segments.push_back(PathSegment{0.7, h});
  const PenaltySchedule s = PenaltySchedule::cliff(4, 100.0);
  CHECK(killing_length(p) == doctest::Approx(0.7));
  CHECK(complexity_length(p, s) == doctest::Approx(0.7));

  Path p3(4);
  Hamiltonian h3(4);
  h3.add(PauliString::parse("XYZI"), 1.0);
  p3.segments.push_back(PathSegment{0.7, h3});
  CHECK(complexity_length(p3, s) == doctest::Approx(7.0));

  Path mixed(4);
  Hamiltonian hm(4);
  hm.add(PauliString::parse("XIII"), 0.6);
  hm.add(PauliString::parse("XYZI"), 0.8);
  mixed.segments.push_back(PathSegment{1.0, hm});
  CHECK(complexity_length(mixed, s) ==
        doctest::Approx(std::sqrt(0.36 + 0.64 * 100.0)));
}

TEST_CASE("difficulty matches the penalty-weighted sum") {
  const PenaltySchedule s = PenaltySchedule::cliff(4, 64.0);
  Hamiltonian h2(4);
  h2.add(PauliString::parse("XZII"), 1.0);
  CHECK(difficulty(h2, s).gamma == doctest::Approx(1.0));

  Hamiltonian h3(4);
  h3.add(PauliString::parse("XYZI"), 1.0);
  CHECK(difficulty(h3, s).gamma == doctest::Approx(8.0));

  Rng rng(67);
  const Hamiltonian h = random_unit_hamiltonian(rng, 3);
  const PenaltySchedule b = PenaltySchedule::binomial(3, 1.0);
  double expect = 0.0;
  for (const auto& [p, c] : h.terms) expect += b.penalty(p) * c * c;
  CHECK(difficulty(h, b).gamma == doctest::Approx(std::sqrt(expect)));

  Hamiltonian big(4);
  big.add(PauliString::parse("XZII"), 2.0);
  CHECK_THROWS_AS(difficulty(big, s), std::invalid_argument);
}

TEST_CASE("evolve respects segment ordering") {
  Path p(1);
  Hamiltonian hx(1), hy(1);
  hx.add(PauliString::parse("X"), 1.0);
  hy.add(PauliString::parse("Y"), 1.0);
  p.segments.push_back(PathSegment{M_PI, hx});
  CHECK((evolve(p) + DenseMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-13);

  Path two(1);
  two.segments.push_back(PathSegment{M_PI_2, hx});
  two.segments.push_back(PathSegment{M_PI_2, hy});
  const DenseMatrix want = expm_hermitian(dense(hy), M_PI_2) *
                           expm_hermitian(dense(hx), M_PI_2);
  CHECK((evolve(two) - want).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("evolve matches the fine-stepping oracle") {
  Rng rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    Path p(3);
    for (int s = 0; s < 3; ++s) {
      p.segments.push_back(PathSegment{rng.next_uniform(0.1, 0.6),
                                       random_unit_hamiltonian(rng, 3)});
    }
    REQUIRE((evolve(p) - oracles::evolve_fine(p, 1000)).cwiseAbs().maxCoeff() <
            1e-7);
  }
}

TEST_CASE("evolution is right-invariant") {
  Rng rng(73);
  Path p(2);
  p.segments.push_back(PathSegment{0.5, random_unit_hamiltonian(rng, 2)});
  p.segments.push_back(PathSegment{0.3, random_unit_hamiltonian(rng, 2)});
  const DenseMatrix ur = random_unitary(rng, 2);
  // Starting the same path at U_R lands at evolve(p) * U_R, the same
  // distance from its start as the original path is from the identity.
  CHECK(killing_distance(evolve(p) * ur, ur) ==
        doctest::Approx(killing_distance(evolve(p),
                                         DenseMatrix::Identity(4, 4)))
            .epsilon(1e-8));
}

TEST_CASE("larger schedules give larger complexity lengths") {
  Rng rng(79);
  Path p(3);
  p.segments.push_back(PathSegment{0.9, random_unit_hamiltonian(rng, 3)});
  const PenaltySchedule soft = PenaltySchedule::binomial(3, 0.5);
  const PenaltySchedule hard = PenaltySchedule::binomial(3, 2.0);
  CHECK(complexity_length(p, soft) <= complexity_length(p, hard));
  CHECK(killing_length(p) <= complexity_length(p, soft));
}

TEST_CASE("geodesics keep constant H under the bi-invariant metric") {
  Rng rng(83);
  const Hamiltonian h0 = random_unit_hamiltonian(rng, 2);
  const PenaltySchedule flat =
      PenaltySchedule::table(2, {1.0, 1.0, 1.0});
  GeodesicStats stats;
  integrate_geodesic(h0, flat, 1.0, 1e-3, &stats);
  CHECK(stats.max_h_drift <= 1e-9);
  CHECK(stats.max_rel_gamma_drift <= 1e-9);
}

TEST_CASE("geodesics conserve difficulty under penalty schedules") {
  Rng rng(89);
  for (const PenaltySchedule& s :
       {PenaltySchedule::cliff(3, 100.0), PenaltySchedule::exponential(3, 2.0)}) {
    const Hamiltonian h0 = random_unit_hamiltonian(rng, 3);
    GeodesicStats stats;
    const Path geo = integrate_geodesic(h0, s, 1.0, 1e-3, &stats);
    REQUIRE(stats.max_rel_gamma_drift <= 1e-6);
    REQUIRE(geo.segments.size() == 1000);
    REQUIRE(killing_length(geo) > 0.0);
  }
}
