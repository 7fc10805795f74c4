#include "ell1/function.hpp"

#include <algorithm>
#include <cmath>

namespace ell1 {

namespace {

constexpr int kTrigBaseSamples = 4096;

void prune_trig(TrigPolynomial& t) {
  for (auto it = t.coeffs.begin(); it != t.coeffs.end();) {
    if (it->second == Complex(0.0, 0.0))
      it = t.coeffs.erase(it);
    else
      ++it;
  }
}

// Trim leading/trailing background entries so equal functions share one form.
void canonicalize_orbit_table(OrbitTable& t) {
  std::size_t lead = 0;
  while (lead < t.values.size() && t.values[lead] == t.background) ++lead;
  std::size_t trail = t.values.size();
  while (trail > lead && t.values[trail - 1] == t.background) --trail;
  if (lead > 0 || trail < t.values.size()) {
    t.values = std::vector<GaussianRational>(t.values.begin() + lead, t.values.begin() + trail);
    t.lo += static_cast<long long>(lead);
  }
  if (t.values.empty()) t.lo = 0;
}

}  // namespace

int trig_sup_samples(const RationalRotation& rot) {
  const long long q = rot.q;
  long long n = (kTrigBaseSamples + q - 1) / q * q;
  return static_cast<int>(n);
}

FunctionOnX::FunctionOnX(DynSystem sys, DenseTable t) : sys_(std::move(sys)), repr_(std::move(t)) {
  if (sys_.backend() != Backend::FinitePerm)
    throw DomainError("dense tables belong to the finite permutation backend");
  if (static_cast<int>(std::get<DenseTable>(repr_).values.size()) != sys_.size())
    throw DomainError("table size does not match the system");
}

FunctionOnX::FunctionOnX(DynSystem sys, TrigPolynomial t) : sys_(std::move(sys)), repr_(std::move(t)) {
  if (sys_.backend() != Backend::RationalRot)
    throw DomainError("trig polynomials belong to the rational rotation backend");
  prune_trig(std::get<TrigPolynomial>(repr_));
}

FunctionOnX::FunctionOnX(DynSystem sys, OrbitTable t) : sys_(std::move(sys)), repr_(std::move(t)) {
  if (sys_.backend() != Backend::AperiodicOrbit)
    throw DomainError("orbit tables belong to the aperiodic orbit model");
  canonicalize_orbit_table(std::get<OrbitTable>(repr_));
}

FunctionOnX FunctionOnX::constant(const DynSystem& sys, const GaussianRational& c) {
  switch (sys.backend()) {
    case Backend::FinitePerm:
      return FunctionOnX(sys, DenseTable{std::vector<GaussianRational>(
                                  static_cast<std::size_t>(sys.size()), c)});
    case Backend::RationalRot: {
      TrigPolynomial t;
      if (!c.is_zero()) t.coeffs[0] = c.to_complex();
      return FunctionOnX(sys, std::move(t));
    }
    case Backend::AperiodicOrbit:
      return FunctionOnX(sys, OrbitTable{c, 0, {}});
  }
  throw DomainError("unreachable");
}

FunctionOnX FunctionOnX::constant(const DynSystem& sys, Complex c) {
  if (sys.backend() == Backend::RationalRot) {
    TrigPolynomial t;
    if (c != Complex(0.0, 0.0)) t.coeffs[0] = c;
    return FunctionOnX(sys, std::move(t));
  }
  return constant(sys, GaussianRational::from_complex(c));
}

FunctionOnX FunctionOnX::indicator(const DynSystem& sys, const Point& x) {
  sys.check_point(x);
  switch (sys.backend()) {
    case Backend::FinitePerm: {
      DenseTable t{std::vector<GaussianRational>(static_cast<std::size_t>(sys.size()),
                                                 GaussianRational(0))};
      t.values[static_cast<std::size_t>(std::get<PermPoint>(x).index)] = GaussianRational(1);
      return FunctionOnX(sys, std::move(t));
    }
    case Backend::AperiodicOrbit: {
      OrbitTable t;
      t.lo = std::get<OrbitPoint>(x).k;
      t.values = {GaussianRational(1)};
      return FunctionOnX(sys, std::move(t));
    }
    case Backend::RationalRot:
      throw DomainError("point indicators are not continuous on the circle");
  }
  throw DomainError("unreachable");
}

bool FunctionOnX::is_zero() const {
  if (auto* t = as_table())
    return std::all_of(t->values.begin(), t->values.end(),
                       [](const GaussianRational& v) { return v.is_zero(); });
  if (auto* t = as_trig()) return t->coeffs.empty();
  const OrbitTable& t = *as_orbit_table();
  return t.background.is_zero() &&
         std::all_of(t.values.begin(), t.values.end(),
                     [](const GaussianRational& v) { return v.is_zero(); });
}

Complex FunctionOnX::evaluate(const Point& x) const {
  if (auto ex = evaluate_exact(x)) return ex->to_complex();
  const TrigPolynomial& t = *as_trig();
  const Rational& theta = std::get<RotPoint>(x).angle;
  Complex acc(0.0, 0.0);
  for (const auto& [m, c] : t.coeffs) acc += c * unit_phase(Rational(m) * theta);
  return acc;
}

std::optional<GaussianRational> FunctionOnX::evaluate_exact(const Point& x) const {
  sys_.check_point(x);
  if (auto* t = as_table())
    return t->values[static_cast<std::size_t>(std::get<PermPoint>(x).index)];
  if (auto* t = as_orbit_table()) {
    const long long k = std::get<OrbitPoint>(x).k;
    if (k < t->lo || k >= t->lo + static_cast<long long>(t->values.size())) return t->background;
    return t->values[static_cast<std::size_t>(k - t->lo)];
  }
  return std::nullopt;
}

double FunctionOnX::sup_norm() const {
  if (auto sq = sup_norm_squared_exact()) return sqrt_to_double(*sq);
  const TrigPolynomial& t = *as_trig();
  const int n = trig_sup_samples(sys_.rotation());
  double best = 0.0;
  for (int k = 0; k < n; ++k) {
    Complex acc(0.0, 0.0);
    const Rational theta(k, n);
    for (const auto& [m, c] : t.coeffs) acc += c * unit_phase(Rational(m) * theta);
    best = std::max(best, std::abs(acc));
  }
  return best;
}

std::optional<Rational> FunctionOnX::sup_norm_squared_exact() const {
  auto fold = [](const std::vector<GaussianRational>& vs, Rational init) {
    for (const auto& v : vs) init = std::max(init, v.norm2());
    return init;
  };
  if (auto* t = as_table()) return fold(t->values, Rational(0));
  if (auto* t = as_orbit_table()) return fold(t->values, t->background.norm2());
  return std::nullopt;
}

FunctionOnX FunctionOnX::alpha_power(long long n) const {
  if (auto* t = as_table()) {
    // g(x) = f(sigma^{-n} x), i.e. g[sigma^n y] = f[y].
    DenseTable out{std::vector<GaussianRational>(t->values.size())};
    for (int i = 0; i < sys_.size(); ++i) {
      const Point target = apply_sigma(sys_, PermPoint{i}, n);
      out.values[static_cast<std::size_t>(std::get<PermPoint>(target).index)] =
          t->values[static_cast<std::size_t>(i)];
    }
    return FunctionOnX(sys_, std::move(out));
  }
  if (auto* t = as_trig()) {
    const auto& rot = sys_.rotation();
    TrigPolynomial out;
    for (const auto& [m, c] : t->coeffs)
      out.coeffs[m] = c * unit_phase(Rational(-m * n * rot.p, rot.q));
    return FunctionOnX(sys_, std::move(out));
  }
  const OrbitTable& t = *as_orbit_table();
  OrbitTable out = t;
  out.lo = t.lo + n;
  return FunctionOnX(sys_, std::move(out));
}

FunctionOnX FunctionOnX::conj() const {
  if (auto* t = as_table()) {
    DenseTable out = *t;
    for (auto& v : out.values) v = v.conj();
    return FunctionOnX(sys_, std::move(out));
  }
  if (auto* t = as_trig()) {
    TrigPolynomial out;
    for (const auto& [m, c] : t->coeffs) out.coeffs[-m] = std::conj(c);
    return FunctionOnX(sys_, std::move(out));
  }
  OrbitTable out = *as_orbit_table();
  out.background = out.background.conj();
  for (auto& v : out.values) v = v.conj();
  return FunctionOnX(sys_, std::move(out));
}

namespace {

template <class Op>
FunctionOnX combine_orbit_tables(const DynSystem& sys, const OrbitTable& a, const OrbitTable& b,
                                 Op op) {
  OrbitTable out;
  out.background = op(a.background, b.background);
  if (a.values.empty() && b.values.empty()) return FunctionOnX(sys, std::move(out));
  const long long lo = std::min(a.values.empty() ? b.lo : a.lo, b.values.empty() ? a.lo : b.lo);
  const long long hi = std::max(a.lo + static_cast<long long>(a.values.size()),
                                b.lo + static_cast<long long>(b.values.size()));
  out.lo = lo;
  out.values.resize(static_cast<std::size_t>(hi - lo));
  auto at = [](const OrbitTable& t, long long k) {
    if (k < t.lo || k >= t.lo + static_cast<long long>(t.values.size())) return t.background;
    return t.values[static_cast<std::size_t>(k - t.lo)];
  };
  for (long long k = lo; k < hi; ++k)
    out.values[static_cast<std::size_t>(k - lo)] = op(at(a, k), at(b, k));
  return FunctionOnX(sys, std::move(out));
}

}  // namespace

FunctionOnX FunctionOnX::operator+(const FunctionOnX& o) const {
  if (!(sys_ == o.sys_)) throw DomainError("function backends do not match");
  if (auto* t = as_table()) {
    DenseTable out = *t;
    for (std::size_t i = 0; i < out.values.size(); ++i)
      out.values[i] = out.values[i] + o.as_table()->values[i];
    return FunctionOnX(sys_, std::move(out));
  }
  if (auto* t = as_trig()) {
    TrigPolynomial out = *t;
    for (const auto& [m, c] : o.as_trig()->coeffs) {
      auto [it, fresh] = out.coeffs.emplace(m, c);
      if (!fresh) it->second += c;
    }
    return FunctionOnX(sys_, std::move(out));
  }
  return combine_orbit_tables(sys_, *as_orbit_table(), *o.as_orbit_table(),
                              [](const GaussianRational& x, const GaussianRational& y) { return x + y; });
}

FunctionOnX FunctionOnX::operator-(const FunctionOnX& o) const {
  return *this + o.scaled(GaussianRational(-1));
}

FunctionOnX FunctionOnX::operator*(const FunctionOnX& o) const {
  if (!(sys_ == o.sys_)) throw DomainError("function backends do not match");
  if (auto* t = as_table()) {
    DenseTable out = *t;
    for (std::size_t i = 0; i < out.values.size(); ++i)
      out.values[i] = out.values[i] * o.as_table()->values[i];
    return FunctionOnX(sys_, std::move(out));
  }
  if (auto* t = as_trig()) {
    TrigPolynomial out;
    for (const auto& [m, c] : t->coeffs)
      for (const auto& [l, d] : o.as_trig()->coeffs) out.coeffs[m + l] += c * d;
    return FunctionOnX(sys_, std::move(out));
  }
  return combine_orbit_tables(sys_, *as_orbit_table(), *o.as_orbit_table(),
                              [](const GaussianRational& x, const GaussianRational& y) { return x * y; });
}

FunctionOnX FunctionOnX::scaled(const GaussianRational& c) const {
  if (auto* t = as_table()) {
    DenseTable out = *t;
    for (auto& v : out.values) v = v * c;
    return FunctionOnX(sys_, std::move(out));
  }
  if (auto* t = as_trig()) {
    TrigPolynomial out = *t;
    const Complex z = c.to_complex();
    for (auto& [m, v] : out.coeffs) v *= z;
    return FunctionOnX(sys_, std::move(out));
  }
  OrbitTable out = *as_orbit_table();
  out.background = out.background * c;
  for (auto& v : out.values) v = v * c;
  return FunctionOnX(sys_, std::move(out));
}

FunctionOnX FunctionOnX::scaled(Complex c) const {
  if (as_trig()) {
    TrigPolynomial out = *as_trig();
    for (auto& [m, v] : out.coeffs) v *= c;
    return FunctionOnX(sys_, std::move(out));
  }
  return scaled(GaussianRational::from_complex(c));
}

bool FunctionOnX::exact() const { return as_trig() == nullptr; }

bool FunctionOnX::equals_exact(const FunctionOnX& o) const {
  if (!(sys_ == o.sys_)) return false;
  return (*this - o).is_zero();
}

}  // namespace ell1
