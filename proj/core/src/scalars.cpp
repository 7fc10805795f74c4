#include "ell1/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

namespace ell1 {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value cannot become a rational");
  return Rational(x);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational frac_mod1(const Rational& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;  // truncates toward zero
  Rational f = r - Rational(q);
  if (f < 0) f += 1;
  return f;
}

Complex unit_phase(const Rational& turns) {
  const double t = to_double(frac_mod1(turns));
  const double angle = 2.0 * std::numbers::pi * t;
  return {std::cos(angle), std::sin(angle)};
}

GaussianRational GaussianRational::inverse() const {
  Rational n2 = norm2();
  if (n2 == 0) throw DomainError("division by zero Gaussian rational");
  return {re / n2, -im / n2};
}

SqrtBounds rational_sqrt_bounds(const Rational& r, unsigned precision_bits) {
  if (r < 0) throw DomainError("sqrt of negative rational");
  if (r == 0) return {Rational(0), Rational(0)};
  // sqrt(p/q) = isqrt(p*q*4^k) / (q*2^k) up to one unit in the last place.
  BigInt p = numerator(r), q = denominator(r);
  BigInt scaled = p * q;
  scaled <<= 2 * precision_bits;
  BigInt s = boost::multiprecision::sqrt(scaled);  // floor square root
  BigInt den = q;
  den <<= precision_bits;
  Rational lower(s, den);
  Rational upper(s + 1, den);
  return {lower, upper};
}

double sqrt_to_double(const Rational& r) {
  SqrtBounds b = rational_sqrt_bounds(r, 80);
  return to_double((b.lower + b.upper) / 2);
}

RootOfUnity::RootOfUnity(long long kk, long long ord) : k(kk), order(ord) {
  if (order < 1) throw DomainError("root of unity needs order >= 1");
  k %= order;
  if (k < 0) k += order;
}

RootOfUnity RootOfUnity::power(long long e) const {
  // k*e may overflow for adversarial inputs; orders here are tiny.
  return RootOfUnity((k * e) % order, order);
}

namespace {

// Quotient of integer polynomials, exact; divisor must be monic.
std::vector<BigInt> poly_div_exact(const std::vector<BigInt>& num,
                                   const std::vector<BigInt>& den) {
  std::vector<BigInt> rem = num;
  const std::size_t dn = den.size() - 1;
  if (rem.size() - 1 < dn) throw DomainError("polynomial division underflow");
  std::vector<BigInt> quot(rem.size() - dn, BigInt(0));
  for (std::size_t i = rem.size(); i-- > dn;) {
    BigInt c = rem[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= c * den[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw DomainError("polynomial division is not exact");
  return quot;
}

std::vector<BigInt> cyclotomic_polynomial(long long m) {
  static std::map<long long, std::vector<BigInt>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
  std::vector<BigInt> poly(static_cast<std::size_t>(m) + 1, BigInt(0));
  poly[0] = -1;
  poly.back() = 1;
  for (long long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    poly = poly_div_exact(poly, cyclotomic_polynomial(d));
  }
  cache[m] = poly;
  return poly;
}

}  // namespace

CyclotomicField::CyclotomicField(long long order) : order_(order) {
  if (order < 1 || order % 4 != 0)
    throw DomainError("cyclotomic field order must be a positive multiple of 4");
  phi_ = cyclotomic_polynomial(order);
  const std::size_t deg = phi_.size() - 1;
  powers_.resize(static_cast<std::size_t>(order));
  // Iteratively reduce x^e: multiply the previous power by x and fold the
  // leading coefficient through Phi_M (monic).
  std::vector<Rational> cur(deg, Rational(0));
  cur[0] = 1;
  powers_[0] = cur;
  for (long long e = 1; e < order; ++e) {
    std::vector<Rational> next(deg, Rational(0));
    for (std::size_t i = 0; i + 1 < deg; ++i) next[i + 1] = cur[i];
    Rational lead = cur[deg - 1];
    if (lead != 0) {
      for (std::size_t i = 0; i < deg; ++i) next[i] -= lead * Rational(phi_[i]);
    }
    powers_[static_cast<std::size_t>(e)] = next;
    cur = std::move(next);
  }
}

const std::vector<Rational>& CyclotomicField::power_basis(long long e) const {
  long long r = e % order_;
  if (r < 0) r += order_;
  return powers_[static_cast<std::size_t>(r)];
}

CycNum::CycNum(const CyclotomicField* field, std::vector<Rational> coords)
    : field_(field), coords_(std::move(coords)) {
  coords_.resize(field_->degree(), Rational(0));
}

CycNum CycNum::zero(const CyclotomicField& field) {
  return CycNum(&field, std::vector<Rational>(field.degree(), Rational(0)));
}

CycNum CycNum::from_gaussian(const CyclotomicField& field, const GaussianRational& z) {
  CycNum out = zero(field);
  out.coords_[0] = z.re;
  if (z.im != 0) {
    const auto& i_coords = field.power_basis(field.order() / 4);
    for (std::size_t j = 0; j < out.coords_.size(); ++j)
      out.coords_[j] += z.im * i_coords[j];
  }
  return out;
}

CycNum CycNum::root_power(const CyclotomicField& field, long long e) {
  return CycNum(&field, field.power_basis(e));
}

bool CycNum::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += o.coords_[i];
  return out;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] -= o.coords_[i];
  return out;
}

CycNum CycNum::operator*(const CycNum& o) const {
  const std::size_t deg = field_->degree();
  std::vector<Rational> conv(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (o.coords_[j] == 0) continue;
      conv[i + j] += coords_[i] * o.coords_[j];
    }
  }
  // Fold exponents >= deg back through the power table.
  std::vector<Rational> out(deg, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) out[i] = conv[i];
  for (std::size_t e = deg; e < conv.size(); ++e) {
    if (conv[e] == 0) continue;
    const auto& basis = field_->power_basis(static_cast<long long>(e));
    for (std::size_t i = 0; i < deg; ++i) out[i] += conv[e] * basis[i];
  }
  return CycNum(field_, std::move(out));
}

CycNum CycNum::conj() const {
  // Complex conjugation sends zeta^j to zeta^{M-j}.
  CycNum out = zero(*field_);
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] == 0) continue;
    const auto& basis = field_->power_basis(field_->order() - static_cast<long long>(j));
    for (std::size_t i = 0; i < out.coords_.size(); ++i)
      out.coords_[i] += coords_[j] * basis[i];
  }
  return out;
}

bool CycNum::operator==(const CycNum& o) const { return (*this - o).is_zero(); }

}  // namespace ell1
