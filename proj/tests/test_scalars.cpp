#include <doctest.h>

#include "ell1/scalars.hpp"

using namespace ell1;

TEST_CASE("rationals from doubles are exact") {
  CHECK(rational_from_double(0.25) == Rational(1, 4));
  CHECK(rational_from_double(-1.5) == Rational(-3, 2));
  CHECK(to_double(rational_from_double(0.3)) == 0.3);
  CHECK(frac_mod1(Rational(7, 3)) == Rational(1, 3));
  CHECK(frac_mod1(Rational(-1, 4)) == Rational(3, 4));
}

TEST_CASE("unit_phase reduces the angle exactly first") {
  const Complex a = unit_phase(Rational(5, 4));
  const Complex b = unit_phase(Rational(1, 4));
  CHECK(a == b);
  CHECK(unit_phase(Rational(0)) == Complex(1.0, 0.0));
}

TEST_CASE("gaussian rational field operations") {
  GaussianRational z{Rational(3, 5), Rational(4, 5)};
  CHECK(z.norm2() == Rational(1));
  CHECK((z * z.conj()).re == Rational(1));
  CHECK((z * z.inverse()).re == Rational(1));
  CHECK((z * z.inverse()).im == Rational(0));
  CHECK(GaussianRational::from_complex(Complex(0.5, -0.25)) ==
        GaussianRational(Rational(1, 2), Rational(-1, 4)));
}

TEST_CASE("certified sqrt bounds enclose tightly") {
  for (const Rational r : {Rational(2), Rational(1, 3), Rational(49, 4), Rational(0)}) {
    const SqrtBounds b = rational_sqrt_bounds(r);
    CHECK(b.lower * b.lower <= r);
    CHECK(b.upper * b.upper >= r);
    CHECK(b.upper - b.lower <= Rational(1, BigInt(1) << 64));
  }
  CHECK(sqrt_to_double(Rational(4)) == 2.0);
}

TEST_CASE("cyclotomic field identifies i with the quarter turn") {
  // zeta_4 = i: the residue of x must equal the embedded Gaussian unit.
  CyclotomicField f4(4);
  CHECK(f4.degree() == 2);
  const CycNum zeta = CycNum::root_power(f4, 1);
  const CycNum i = CycNum::from_gaussian(f4, GaussianRational(Rational(0), Rational(1)));
  CHECK((zeta - i).is_zero());

  CyclotomicField f12(12);
  CHECK(f12.degree() == 4);
  const CycNum z = CycNum::root_power(f12, 1);
  // zeta_12^12 = 1 and no smaller positive power is 1
  CycNum acc = CycNum::from_gaussian(f12, GaussianRational(1));
  for (int k = 1; k <= 12; ++k) {
    acc = acc * z;
    const bool is_one = (acc - CycNum::from_gaussian(f12, GaussianRational(1))).is_zero();
    CHECK(is_one == (k == 12));
  }
}

TEST_CASE("cyclotomic conjugation inverts roots") {
  CyclotomicField f(20);
  const CycNum z = CycNum::root_power(f, 3);
  CHECK((z * z.conj() - CycNum::from_gaussian(f, GaussianRational(1))).is_zero());
  const GaussianRational g{Rational(2, 7), Rational(-5, 3)};
  CHECK((CycNum::from_gaussian(f, g).conj() - CycNum::from_gaussian(f, g.conj())).is_zero());
}

TEST_CASE("roots of unity normalize their exponent") {
  RootOfUnity w(-3, 8);
  CHECK(w.k == 5);
  CHECK(w.power(2).k == 2);
  CHECK(std::abs(w.value() - std::conj(RootOfUnity(3, 8).value())) < 1e-15);
}
