#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ell1 {

using Complex = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Error raised by operations whose preconditions are violated
/// (point outside domain, system mismatch, non-invariant subset, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Error raised when a requested tolerance cannot be met with the
/// allowed resources (e.g. Fourier truncation order exhausted).
class ToleranceError : public std::runtime_error {
public:
  explicit ToleranceError(const std::string& what) : std::runtime_error(what) {}
};

/// Error raised by malformed textual/JSON input.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Every double is a binary rational, so this conversion is exact.
Rational rational_from_double(double x);
double to_double(const Rational& r);

/// Reduces r modulo 1 into [0, 1).
Rational frac_mod1(const Rational& r);

/// e^{2*pi*i*t} for t a fraction of a turn, reduced exactly mod 1 first so
/// that equal angles always yield bit-identical values.
Complex unit_phase(const Rational& turns);

/// Complex number with exact rational real and imaginary parts.
/// This is the coefficient field used by the table-backed function types;
/// all ring operations on them are exact.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRational(long long n) : re(n), im(0) {}
  static GaussianRational from_complex(Complex z) {
    return {rational_from_double(z.real()), rational_from_double(z.imag())};
  }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  /// |z|^2, exact.
  Rational norm2() const { return re * re + im * im; }
  Complex to_complex() const { return {to_double(re), to_double(im)}; }

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational inverse() const;
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

/// Certified enclosure of sqrt(r) for r >= 0: lower <= sqrt(r) <= upper,
/// with both bounds exact rationals within 4^-precision_bits relative width.
/// Used to decide norm inequalities without floating-point slop.
struct SqrtBounds {
  Rational lower;
  Rational upper;
};
SqrtBounds rational_sqrt_bounds(const Rational& r, unsigned precision_bits = 96);

/// Deterministic double sqrt of an exact rational (round via the certified
/// midpoint); equal rationals give bit-identical doubles.
double sqrt_to_double(const Rational& r);

/// A root of unity e^{2*pi*i*k/order}, kept exactly.
struct RootOfUnity {
  long long k = 0;
  long long order = 1;  // >= 1

  RootOfUnity() = default;
  RootOfUnity(long long kk, long long ord);
  Rational turns() const { return Rational(k, order); }
  Complex value() const { return unit_phase(turns()); }
  RootOfUnity power(long long e) const;
  RootOfUnity conj() const { return power(-1); }
};

/// The number field Q(zeta_M) with M a multiple of 4, presented as
/// Q[x] / Phi_M(x).  Since Phi_M is irreducible over Q, the residue
/// classes of 1, x, ..., x^{phi(M)-1} are a Q-basis, so an element is
/// zero exactly when all its coordinates vanish.  i = zeta_M^{M/4}
/// lives inside, which lets Gaussian-rational coefficients and
/// root-of-unity evaluation points share one exact arithmetic.
class CyclotomicField {
public:
  explicit CyclotomicField(long long order);

  long long order() const { return order_; }
  std::size_t degree() const { return phi_.size() - 1; }
  const std::vector<BigInt>& minimal_polynomial() const { return phi_; }

  /// x^e mod Phi_M as basis coordinates, e reduced mod M.
  const std::vector<Rational>& power_basis(long long e) const;

private:
  long long order_;
  std::vector<BigInt> phi_;                       // monic, degree phi(M)
  std::vector<std::vector<Rational>> powers_;     // x^e mod Phi_M, e = 0..M-1
};

/// Element of Q(zeta_M): coordinates in the power basis of the field.
class CycNum {
public:
  CycNum() = default;
  CycNum(const CyclotomicField* field, std::vector<Rational> coords);

  static CycNum zero(const CyclotomicField& field);
  static CycNum from_gaussian(const CyclotomicField& field, const GaussianRational& z);
  /// zeta_M^e
  static CycNum root_power(const CyclotomicField& field, long long e);

  bool is_zero() const;
  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum conj() const;
  bool operator==(const CycNum& o) const;

  const CyclotomicField* field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

private:
  const CyclotomicField* field_ = nullptr;
  std::vector<Rational> coords_;
};

}  // namespace ell1
