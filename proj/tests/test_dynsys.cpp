#include <doctest.h>

#include "test_support.hpp"

using namespace ell1;
using testsup::Rng;

namespace {
const DynSystem kTwoCycles{FinitePermutation{{1, 2, 0, 4, 3}}};  // (0 1 2)(3 4)
}

TEST_CASE("apply_sigma on each backend") {
  CHECK(apply_sigma(kTwoCycles, PermPoint{0}, 2) == Point{PermPoint{2}});
  CHECK(apply_sigma(kTwoCycles, PermPoint{0}, 0) == Point{PermPoint{0}});
  CHECK(apply_sigma(kTwoCycles, PermPoint{3}, -1) == Point{PermPoint{4}});

  DynSystem rot{RationalRotation{1, 3}};
  CHECK(apply_sigma(rot, RotPoint{Rational(0)}, 4) == Point{RotPoint{Rational(1, 3)}});

  DynSystem aper{AperiodicOrbitModel{16}};
  CHECK(apply_sigma(aper, OrbitPoint{-2}, 5) == Point{OrbitPoint{3}});

  CHECK_THROWS_AS(apply_sigma(kTwoCycles, PermPoint{7}, 1), DomainError);
  CHECK_THROWS_AS(apply_sigma(kTwoCycles, OrbitPoint{0}, 1), DomainError);
}

TEST_CASE("apply_sigma composes additively") {
  Rng rng(7);
  std::uniform_int_distribution<long long> step(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    DynSystem sys = testsup::random_perm_system(rng);
    std::uniform_int_distribution<int> pt(0, sys.size() - 1);
    const Point x = PermPoint{pt(rng)};
    const long long n = step(rng), m = step(rng);
    CHECK(apply_sigma(sys, x, n + m) == apply_sigma(sys, apply_sigma(sys, x, n), m));
  }
  DynSystem rot{RationalRotation{2, 5}};
  const Point theta = RotPoint{Rational(1, 7)};
  CHECK(apply_sigma(rot, theta, 3 + 4) == apply_sigma(rot, apply_sigma(rot, theta, 3), 4));
}

TEST_CASE("period per backend") {
  CHECK(period(kTwoCycles, PermPoint{3}) == 2);
  CHECK(period(kTwoCycles, PermPoint{1}) == 3);
  CHECK(period(DynSystem{RationalRotation{2, 5}}, RotPoint{Rational(1, 7)}) == 5);
  CHECK_FALSE(period(DynSystem{AperiodicOrbitModel{}}, OrbitPoint{0}).has_value());
}

TEST_CASE("orbit listing") {
  Orbit o = orbit(kTwoCycles, PermPoint{4});
  REQUIRE(o.points.size() == 2);
  CHECK(o.points[0] == Point{PermPoint{4}});
  CHECK(o.points[1] == Point{PermPoint{3}});

  Orbit rot_orbit = orbit(DynSystem{RationalRotation{1, 3}}, RotPoint{Rational(1, 6)});
  REQUIRE(rot_orbit.points.size() == 3);
  CHECK(rot_orbit.points[1] == Point{RotPoint{Rational(1, 2)}});
  CHECK(rot_orbit.points[2] == Point{RotPoint{Rational(5, 6)}});

  CHECK(orbit(DynSystem{AperiodicOrbitModel{}}, OrbitPoint{0}).infinite);
}

TEST_CASE("orbit consistency with period") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    DynSystem sys = testsup::random_perm_system(rng);
    std::uniform_int_distribution<int> pt(0, sys.size() - 1);
    const Point x = PermPoint{pt(rng)};
    const long long p = *period(sys, x);
    Orbit o = orbit(sys, x);
    CHECK(static_cast<long long>(o.points.size()) == p);
    CHECK(apply_sigma(sys, x, p) == x);
    // pairwise distinct
    for (std::size_t i = 0; i < o.points.size(); ++i)
      for (std::size_t j = i + 1; j < o.points.size(); ++j)
        CHECK_FALSE(o.points[i] == o.points[j]);
  }
}

TEST_CASE("orbit_space partitions finite systems") {
  auto orbits = orbit_space(kTwoCycles);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].points.size() == 3);
  CHECK(orbits[1].points.size() == 2);

  DynSystem id3{FinitePermutation{{0, 1, 2}}};
  CHECK(orbit_space(id3).size() == 3);

  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    DynSystem sys = testsup::random_perm_system(rng);
    auto parts = orbit_space(sys);
    std::vector<int> seen(static_cast<std::size_t>(sys.size()), 0);
    for (const Orbit& o : parts)
      for (const Point& x : o.points) seen[static_cast<std::size_t>(std::get<PermPoint>(x).index)]++;
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
  CHECK_THROWS_AS(orbit_space(DynSystem{AperiodicOrbitModel{}}), DomainError);
}

TEST_CASE("rotation orbit deduplication via the z^q label") {
  DynSystem rot{RationalRotation{1, 2}};
  auto orbits = orbit_space(
      rot, {RotPoint{Rational(0)}, RotPoint{Rational(1, 4)}, RotPoint{Rational(1, 2)}});
  CHECK(orbits.size() == 2);  // 1/2 lies on the orbit of 0

  // same orbit iff q*theta agree mod 1
  DynSystem rot5{RationalRotation{2, 5}};
  const Rational a(1, 7), b = frac_mod1(Rational(1, 7) + Rational(2, 5));
  CHECK(rotation_orbit_label(rot5.rotation(), a) == rotation_orbit_label(rot5.rotation(), b));
  CHECK(rotation_orbit_label(rot5.rotation(), a) !=
        rotation_orbit_label(rot5.rotation(), Rational(1, 9)));
}

TEST_CASE("system predicates") {
  SUBCASE("single cycle is transitive") {
    DynSystem c3{FinitePermutation{{1, 2, 0}}};
    auto p = system_predicates(c3);
    CHECK(p.topologically_transitive == true);
    CHECK(p.free == false);
    CHECK(p.topologically_free == false);
  }
  SUBCASE("two 2-cycles are not transitive") {
    DynSystem two{FinitePermutation{{1, 0, 3, 2}}};
    CHECK(system_predicates(two).topologically_transitive == false);
  }
  SUBCASE("aperiodic model is free, transitivity not computed") {
    auto p = system_predicates(DynSystem{AperiodicOrbitModel{}});
    CHECK(p.free == true);
    CHECK(p.topologically_free == true);
    CHECK_FALSE(p.topologically_transitive.has_value());
  }
  SUBCASE("rotation reports the all-points-periodic facts only") {
    auto p = system_predicates(DynSystem{RationalRotation{1, 3}});
    CHECK(p.free == false);
    CHECK(p.topologically_free == false);
    CHECK_FALSE(p.topologically_transitive.has_value());
  }
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS((DynSystem(FinitePermutation{{0, 0, 1}})), DomainError);
  CHECK_THROWS_AS((DynSystem(FinitePermutation{{1, 2, 3}})), DomainError);
  CHECK_THROWS_AS((DynSystem(RationalRotation{2, 4})), DomainError);
  CHECK_THROWS_AS((DynSystem(RationalRotation{1, 0})), DomainError);
}
