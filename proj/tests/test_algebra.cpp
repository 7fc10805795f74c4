#include <doctest.h>

#include "test_support.hpp"

using namespace ell1;
using testsup::Rng;

namespace {

const DynSystem kSwap{FinitePermutation{{1, 0}}};
const DynSystem kTwoCycles{FinitePermutation{{1, 2, 0, 4, 3}}};
const DynSystem kOnePoint{FinitePermutation{{0}}};
const DynSystem kAper{AperiodicOrbitModel{8}};

FunctionOnX table(const DynSystem& sys, std::vector<long long> reals) {
  DenseTable t;
  for (long long v : reals) t.values.push_back(GaussianRational(v));
  return FunctionOnX(sys, std::move(t));
}

AlgebraElement coeff(const DynSystem& sys, long long n, FunctionOnX f) {
  std::map<long long, FunctionOnX> m;
  m.emplace(n, std::move(f));
  return AlgebraElement(sys, std::move(m));
}

}  // namespace

TEST_CASE("alpha_power examples") {
  FunctionOnX f = table(kSwap, {1, 2});
  FunctionOnX g = f.alpha_power(1);
  CHECK(*g.evaluate_exact(PermPoint{0}) == GaussianRational(2));
  CHECK(*g.evaluate_exact(PermPoint{1}) == GaussianRational(1));
  CHECK(f.alpha_power(0).equals_exact(f));
  CHECK(f.alpha_power(1).sup_norm() == f.sup_norm());

  DynSystem rot{RationalRotation{1, 4}};
  TrigPolynomial mono;
  mono.coeffs[1] = Complex(1.0, 0.0);
  FunctionOnX z(rot, std::move(mono));
  FunctionOnX az = z.alpha_power(1);
  const Complex expected = unit_phase(Rational(-1, 4));  // e^{-2 pi i / 4}
  CHECK(az.as_trig()->coeffs.at(1) == expected);
}

TEST_CASE("multiply reduces to Laurent multiplication on one point") {
  // (delta + 2 delta^2) . (3 delta^-1) = 3 + 6 delta
  AlgebraElement a = AlgebraElement::delta_power(kOnePoint, 1) +
                     AlgebraElement::delta_power(kOnePoint, 2).scaled(GaussianRational(2));
  AlgebraElement b = AlgebraElement::delta_power(kOnePoint, -1).scaled(GaussianRational(3));
  AlgebraElement prod = a * b;
  AlgebraElement expected = AlgebraElement::unit(kOnePoint).scaled(GaussianRational(3)) +
                            AlgebraElement::delta_power(kOnePoint, 1).scaled(GaussianRational(6));
  CHECK(prod.equals_exact(expected));

  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    AlgebraElement x = testsup::random_element(rng, kOnePoint);
    AlgebraElement y = testsup::random_element(rng, kOnePoint);
    CHECK(testsup::laurent_of(x * y) ==
          testsup::laurent_multiply(testsup::laurent_of(x), testsup::laurent_of(y)));
    CHECK(testsup::laurent_of(x.involution()) == testsup::laurent_star(testsup::laurent_of(x)));
  }
}

TEST_CASE("twisted convolution from the definition") {
  // (f delta) (g delta) = f . alpha(g) delta^2 with f=(1,2), g=(3,4)
  AlgebraElement a = coeff(kSwap, 1, table(kSwap, {1, 2}));
  AlgebraElement b = coeff(kSwap, 1, table(kSwap, {3, 4}));
  AlgebraElement prod = a * b;
  CHECK(prod.support() == std::vector<long long>{2});
  CHECK(*prod.coefficient(2).evaluate_exact(PermPoint{0}) == GaussianRational(4));
  CHECK(*prod.coefficient(2).evaluate_exact(PermPoint{1}) == GaussianRational(6));
}

TEST_CASE("unit law") {
  Rng rng(22);
  for (const DynSystem& sys : {kSwap, kTwoCycles, kAper}) {
    AlgebraElement a = testsup::random_element(rng, sys);
    CHECK((a * AlgebraElement::unit(sys)).equals_exact(a));
    CHECK((AlgebraElement::unit(sys) * a).equals_exact(a));
  }
}

TEST_CASE("involution examples") {
  AlgebraElement a = coeff(kSwap, 1, table(kSwap, {1, 2}));
  AlgebraElement star = a.involution();
  CHECK(star.support() == std::vector<long long>{-1});
  CHECK(*star.coefficient(-1).evaluate_exact(PermPoint{0}) == GaussianRational(2));
  CHECK(*star.coefficient(-1).evaluate_exact(PermPoint{1}) == GaussianRational(1));

  // delta* = delta^{-1}
  CHECK(AlgebraElement::delta_power(kSwap, 1).involution().equals_exact(
      AlgebraElement::delta_power(kSwap, -1)));

  // real-valued f in C(X): f* = f
  AlgebraElement f = AlgebraElement::embed_function(table(kTwoCycles, {1, -2, 3, 0, 5}));
  CHECK(f.involution().equals_exact(f));
}

TEST_CASE("star is an anti-homomorphic involution") {
  Rng rng(23);
  for (const DynSystem& sys : {kSwap, kTwoCycles, kAper}) {
    for (int trial = 0; trial < 25; ++trial) {
      AlgebraElement a = testsup::random_element(rng, sys);
      AlgebraElement b = testsup::random_element(rng, sys);
      CHECK(a.involution().involution().equals_exact(a));
      CHECK((a * b).involution().equals_exact(b.involution() * a.involution()));
      CHECK(testsup::norm_multiset(a.involution()) == testsup::norm_multiset(a));
      CHECK(a.involution().one_norm() == a.one_norm());
    }
  }
}

TEST_CASE("norm bookkeeping") {
  CHECK((AlgebraElement::delta_power(kSwap, 3) * AlgebraElement::delta_power(kSwap, -3))
            .equals_exact(AlgebraElement::unit(kSwap)));

  // one_norm(f + g delta) = sup|f| + sup|g|
  AlgebraElement a =
      AlgebraElement::embed_function(table(kSwap, {3, -4})) + coeff(kSwap, 1, table(kSwap, {0, 2}));
  CHECK(a.one_norm() == doctest::Approx(6.0).epsilon(1e-15));

  Rng rng(24);
  AlgebraElement r = testsup::random_element(rng, kTwoCycles);
  CHECK(r.scaled(Complex(2.0, 0.0)).one_norm() == doctest::Approx(2.0 * r.one_norm()));
  CHECK(AlgebraElement::zero(kSwap).one_norm() == 0.0);
}

TEST_CASE("submultiplicativity and associativity") {
  Rng rng(25);
  SUBCASE("exact backends, certified with zero tolerance") {
    for (const DynSystem& sys : {kTwoCycles, kAper}) {
      for (int trial = 0; trial < 100; ++trial) {
        AlgebraElement a = testsup::random_element(rng, sys);
        AlgebraElement b = testsup::random_element(rng, sys);
        AlgebraElement c = testsup::random_element(rng, sys, 2, 2);
        const auto lhs = testsup::one_norm_bounds(a * b);
        const auto ra = testsup::one_norm_bounds(a);
        const auto rb = testsup::one_norm_bounds(b);
        CHECK(lhs.upper <= ra.lower * rb.lower);
        CHECK(((a * b) * c).equals_exact(a * (b * c)));
      }
    }
  }
  SUBCASE("trig backend within 1e-12") {
    DynSystem rot{RationalRotation{1, 3}};
    for (int trial = 0; trial < 40; ++trial) {
      AlgebraElement a = testsup::random_element(rng, rot);
      AlgebraElement b = testsup::random_element(rng, rot);
      AlgebraElement c = testsup::random_element(rng, rot, 2, 2);
      CHECK((a * b).one_norm() <= a.one_norm() * b.one_norm() + 1e-12);
      CHECK(approx_equal((a * b) * c, a * (b * c), 1e-12 * (1 + a.one_norm() * b.one_norm() * c.one_norm())));
    }
  }
}

TEST_CASE("covariance delta f delta^{-1} = alpha(f)") {
  Rng rng(26);
  DynSystem rot{RationalRotation{2, 5}};
  for (const DynSystem& sys : {kSwap, kTwoCycles, kAper, rot}) {
    for (int trial = 0; trial < 50; ++trial) {
      FunctionOnX f = testsup::random_function(rng, sys);
      AlgebraElement lhs = AlgebraElement::delta_power(sys, 1) * AlgebraElement::embed_function(f) *
                           AlgebraElement::delta_power(sys, -1);
      CHECK(lhs.equals_exact(AlgebraElement::embed_function(f.alpha_power(1))));
    }
  }
}

TEST_CASE("restriction to an invariant subset") {
  AlgebraElement a = AlgebraElement::embed_function(table(kTwoCycles, {1, 1, 1, 5, 7}));
  auto res = restrict_to_subsystem(a, {3, 4});
  CHECK(res.subsystem.size() == 2);
  CHECK(*res.element.coefficient(0).evaluate_exact(PermPoint{0}) == GaussianRational(5));
  CHECK(*res.element.coefficient(0).evaluate_exact(PermPoint{1}) == GaussianRational(7));

  CHECK(restrict_to_subsystem(AlgebraElement::unit(kTwoCycles), {3, 4})
            .element.equals_exact(AlgebraElement::unit(res.subsystem)));

  CHECK_THROWS_AS(restrict_to_subsystem(a, {0, 3}), DomainError);  // not invariant

  Rng rng(27);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraElement r = testsup::random_element(rng, kTwoCycles);
    CHECK(restrict_to_subsystem(r, {3, 4}).element.one_norm() <= r.one_norm() + 1e-15);
    CHECK(restrict_to_subsystem(r, {0, 1, 2}).element.one_norm() <= r.one_norm() + 1e-15);
  }
}

TEST_CASE("bump functions") {
  FunctionOnX b = bump_function(kAper, OrbitPoint{0}, 2);
  CHECK(*b.evaluate_exact(OrbitPoint{0}) == GaussianRational(1));
  for (long long j : {-2, -1, 1, 2})
    CHECK(b.evaluate_exact(OrbitPoint{j})->is_zero());
  CHECK(b.sup_norm() == 1.0);

  DynSystem five{FinitePermutation{{1, 2, 3, 4, 0}}};
  FunctionOnX b5 = bump_function(five, PermPoint{0}, 2);
  CHECK(*b5.evaluate_exact(PermPoint{0}) == GaussianRational(1));
  for (int i = 1; i < 5; ++i) CHECK(b5.evaluate_exact(PermPoint{i})->is_zero());

  DynSystem three{FinitePermutation{{1, 2, 0}}};
  CHECK_THROWS_AS(bump_function(three, PermPoint{0}, 3), DomainError);

  // radius 0 has no vanishing constraint: the constant 1
  CHECK(bump_function(kAper, OrbitPoint{0}, 0).equals_exact(
      FunctionOnX::constant(kAper, GaussianRational(1))));
}
