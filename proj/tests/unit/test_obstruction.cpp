#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "nilspec/obstruction.hpp"

using namespace nilspec;
using namespace nilspec::testing;

namespace {

using V = std::vector<std::size_t>;

/// Random Poincare-symmetric vector with ends 1.
BettiVector random_betti(Rng& rng, std::size_t p, long max = 3) {
  V v(p + 1);
  for (std::size_t i = 0; i <= p / 2; ++i) v[i] = v[p - i] = static_cast<std::size_t>(uniform(rng, 0, max));
  v.front() = v.back() = 1;
  return BettiVector(v);
}

}  // namespace

TEST_SUITE("betti vectors") {
  TEST_CASE("validation") {
    CHECK_NOTHROW(BettiVector(V{1, 2, 1}));
    CHECK_THROWS_AS(BettiVector(V{1, 2, 2}), InvalidBettiVector);
    CHECK_THROWS_AS(BettiVector(V{0, 1, 0}), InvalidBettiVector);
    CHECK_THROWS_AS(BettiVector(V{1, 2, 3, 1}), InvalidBettiVector);
    CHECK_THROWS_AS(BettiVector(V{}), InvalidBettiVector);
    CHECK(BettiVector::torus(3).values() == V{1, 3, 3, 1});
    CHECK(BettiVector::sphere(3).values() == V{1, 0, 0, 1});
    CHECK(BettiVector::all_ones(2).values() == V{1, 1, 1});
    CHECK(BettiVector(V{1, 2, 1}).at(-1) == 0);
    CHECK(BettiVector(V{1, 2, 1}).at(3) == 0);
  }
}

TEST_SUITE("gysin") {
  TEST_CASE("examples") {
    CHECK(gysin_boundary_betti(BettiVector::torus(2), 2).values() == V{1, 3, 3, 1});
    CHECK(gysin_boundary_betti(BettiVector(V{1, 1}), 2).values() == V{1, 2, 1});
    for (std::size_t q = 2; q <= 5; ++q) {
      V sphere(q, 0);
      sphere.front() = sphere.back() = 1;
      CHECK(gysin_boundary_betti(BettiVector(V{1}), q).values() == sphere);
    }
    CHECK_THROWS_AS(gysin_boundary_betti(BettiVector(V{1}), 1), std::invalid_argument);
  }

  TEST_CASE("boundary is Poincare dual with the expected length") {
    Rng rng(61);
    for (int t = 0; t < 200; ++t) {
      const auto p = static_cast<std::size_t>(uniform(rng, 0, 6));
      const auto q = static_cast<std::size_t>(uniform(rng, 2, 5));
      const auto base = random_betti(rng, p);
      const auto b = gysin_boundary_betti(base, q);  // constructor re-validates duality
      CHECK(b.values().size() == p + q);
      for (long l = 0; l < static_cast<long>(p + q); ++l)
        CHECK(b.at(l) == base.at(l) + base.at(l - static_cast<long>(q) + 1));
    }
  }
}

TEST_SUITE("attractor pair specs") {
  TEST_CASE("validation") {
    CHECK_NOTHROW(AttractorPairSpec::make(4, 2, 2, BettiVector::torus(2), BettiVector::torus(2)));
    CHECK_THROWS_AS(AttractorPairSpec::make(4, 1, 2, BettiVector::all_ones(3), BettiVector::torus(2)),
                    InvalidAttractorSpec);
    CHECK_THROWS_AS(AttractorPairSpec::make(4, 4, 2, BettiVector(V{1}), BettiVector::torus(2)),
                    InvalidAttractorSpec);
    CHECK_THROWS_AS(AttractorPairSpec::make(4, 2, 2, BettiVector::torus(3), BettiVector::torus(2)),
                    InvalidAttractorSpec);
  }

  TEST_CASE("surjectivity gap") {
    // q2 = 3, l = p1, b_{p1}(X1) = 1
    auto spec = AttractorPairSpec::make(5, 2, 3, BettiVector::all_ones(3), BettiVector::all_ones(2));
    auto g = mv_surjectivity_gap(spec, 3);
    CHECK(g.kernel_bound_applies);
    CHECK(g.impossible);
    CHECK(g.image_bound == spec.x2.at(3));
    CHECK(g.target_dim == spec.x1.at(3) + spec.x2.at(3));
    // q2 = 2: no kernel bound, no conclusion at this step
    spec = AttractorPairSpec::make(4, 2, 2, BettiVector::all_ones(2), BettiVector::all_ones(2));
    for (long l = 0; l <= 4; ++l) {
      g = mv_surjectivity_gap(spec, l);
      CHECK_FALSE(g.kernel_bound_applies);
      CHECK(g.kernel_dim == 0);
    }
  }
}

TEST_SUITE("sphere theorem") {
  TEST_CASE("torus bases in dimension 4 are inconsistent at l = 1") {
    const auto spec = AttractorPairSpec::make(4, 2, 2, BettiVector::torus(2), BettiVector::torus(2));
    const auto v = sphere_theorem_check(spec);
    REQUIRE(std::holds_alternative<InputInconsistent>(v));
    const auto& bad = std::get<InputInconsistent>(v);
    REQUIRE(bad.degree);
    CHECK(*bad.degree == 1);
    REQUIRE(bad.failed);
    CHECK(bad.failed->lhs == 1);
    CHECK(bad.failed->rhs == 2);
  }

  TEST_CASE("all-ones inputs force a rational homology sphere") {
    for (std::size_t n = 3; n <= 12; ++n) {
      const auto spec =
          AttractorPairSpec::make(n, 2, 2, BettiVector::all_ones(n - 2), BettiVector::all_ones(n - 2));
      const auto v = sphere_theorem_check(spec);
      REQUIRE(std::holds_alternative<SphereForced>(v));
      const auto& s = std::get<SphereForced>(v);
      CHECK(s.manifold_betti == BettiVector::sphere(n));
      // every link of the chain is an equality 1 >= 1
      CHECK(s.chain.size() == 2 * (n - 2));
      for (const auto& ineq : s.chain) {
        CHECK(ineq.lhs == 1);
        CHECK(ineq.rhs == 1);
      }
    }
  }

  TEST_CASE("any fibre of dimension >= 3 gives the case-1 contradiction") {
    Rng rng(62);
    for (int t = 0; t < 200; ++t) {
      const auto n = static_cast<std::size_t>(uniform(rng, 4, 9));
      auto q1 = static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(n) - 1));
      auto q2 = static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(n) - 1));
      if (std::max(q1, q2) < 3) q2 = 3;
      const auto spec = AttractorPairSpec::make(n, q1, q2, random_betti(rng, n - q1), random_betti(rng, n - q2));
      const auto v = sphere_theorem_check(spec);
      REQUIRE(std::holds_alternative<Case1Contradiction>(v));
      const auto& c = std::get<Case1Contradiction>(v);
      CHECK(c.gap.impossible);
      CHECK(c.swapped == (q1 > q2));
      CHECK(c.degree == static_cast<long>(n - std::min(q1, q2)));
      CHECK(std::find(c.witness_degrees.begin(), c.witness_degrees.end(), c.degree) != c.witness_degrees.end());
      CHECK(c.gap.image_bound < c.gap.target_dim);
    }
  }

  TEST_CASE("case 2 requires matching boundaries") {
    // n = 5, q = 2: bases are 3-manifolds; (1,1,1,1) and (1,0,0,1) give
    // different boundary Betti numbers
    const auto spec = AttractorPairSpec::make(5, 2, 2, BettiVector::all_ones(3), BettiVector::sphere(3));
    const auto v = sphere_theorem_check(spec);
    REQUIRE(std::holds_alternative<InputInconsistent>(v));
    CHECK_FALSE(std::get<InputInconsistent>(v).failed);
  }

  TEST_CASE("verdicts from consistent case-2 inputs agree with boundary matching") {
    Rng rng(63);
    for (int t = 0; t < 200; ++t) {
      const auto n = static_cast<std::size_t>(uniform(rng, 3, 8));
      const auto x1 = random_betti(rng, n - 2, 2), x2 = random_betti(rng, n - 2, 2);
      const auto v = sphere_theorem_check(AttractorPairSpec::make(n, 2, 2, x1, x2));
      const bool boundaries_match = gysin_boundary_betti(x1, 2) == gysin_boundary_betti(x2, 2);
      if (std::holds_alternative<SphereForced>(v)) {
        CHECK(boundaries_match);
        CHECK(x1 == BettiVector::all_ones(n - 2));
        CHECK(x2 == BettiVector::all_ones(n - 2));
      } else {
        REQUIRE(std::holds_alternative<InputInconsistent>(v));
      }
    }
  }
}

TEST_SUITE("toric corollary") {
  TEST_CASE("examples") {
    auto r = toric_corollary_check(4);
    CHECK(r.boundary_b1 == 3);
    CHECK(r.target_b1 == 4);
    CHECK(r.impossible);
    r = toric_corollary_check(3);
    CHECK(r.boundary_b1 == 2);
    CHECK(r.target_b1 == 2);
    CHECK_FALSE(r.impossible);
    r = toric_corollary_check(10);
    CHECK(r.boundary_b1 == 9);
    CHECK(r.target_b1 == 16);
    CHECK(r.impossible);
    CHECK_THROWS_AS(toric_corollary_check(2), std::invalid_argument);
  }

  TEST_CASE("boundary count follows from the gysin formula") {
    for (std::size_t n = 3; n <= 12; ++n) {
      const auto b = gysin_boundary_betti(BettiVector::torus(n - 2), 2);
      const auto r = toric_corollary_check(n);
      CHECK(r.boundary_b1 == b.at(1));
      CHECK(r.target_b1 == 2 * BettiVector::torus(n - 2).at(1));
      CHECK(r.impossible == (n >= 4));
    }
  }
}
