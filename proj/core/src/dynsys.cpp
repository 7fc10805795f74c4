#include "ell1/dynsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ell1 {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

void validate_perm(const FinitePermutation& fp) {
  const int n = static_cast<int>(fp.perm.size());
  std::vector<bool> seen(n, false);
  for (int v : fp.perm) {
    if (v < 0 || v >= n || seen[v]) throw DomainError("permutation array is not a bijection");
    seen[v] = true;
  }
}

}  // namespace

DynSystem::DynSystem(FinitePermutation fp) : backend_(std::move(fp)) {
  validate_perm(finite_perm());
}

DynSystem::DynSystem(RationalRotation rr) : backend_(rr) {
  if (rr.q < 1 || rr.p < 1) throw DomainError("rational rotation needs p >= 1, q >= 1");
  if (gcd_ll(rr.p, rr.q) != 1) throw DomainError("rational rotation needs gcd(p, q) = 1");
}

DynSystem::DynSystem(AperiodicOrbitModel am) : backend_(am) {
  if (am.window < 0) throw DomainError("orbit model window must be >= 0");
}

Backend DynSystem::backend() const {
  if (std::holds_alternative<FinitePermutation>(backend_)) return Backend::FinitePerm;
  if (std::holds_alternative<RationalRotation>(backend_)) return Backend::RationalRot;
  return Backend::AperiodicOrbit;
}

const FinitePermutation& DynSystem::finite_perm() const {
  if (auto* p = std::get_if<FinitePermutation>(&backend_)) return *p;
  throw DomainError("operation requires the finite permutation backend");
}
const RationalRotation& DynSystem::rotation() const {
  if (auto* p = std::get_if<RationalRotation>(&backend_)) return *p;
  throw DomainError("operation requires the rational rotation backend");
}
const AperiodicOrbitModel& DynSystem::orbit_model() const {
  if (auto* p = std::get_if<AperiodicOrbitModel>(&backend_)) return *p;
  throw DomainError("operation requires the aperiodic orbit model backend");
}

int DynSystem::size() const { return static_cast<int>(finite_perm().perm.size()); }

bool DynSystem::operator==(const DynSystem& o) const {
  if (backend() != o.backend()) return false;
  switch (backend()) {
    case Backend::FinitePerm:
      return finite_perm().perm == o.finite_perm().perm;
    case Backend::RationalRot:
      return rotation().p == o.rotation().p && rotation().q == o.rotation().q;
    case Backend::AperiodicOrbit:
      return orbit_model().window == o.orbit_model().window;
  }
  return false;
}

void DynSystem::check_point(const Point& x) const {
  switch (backend()) {
    case Backend::FinitePerm: {
      auto* p = std::get_if<PermPoint>(&x);
      if (!p) throw DomainError("point kind does not match the finite permutation backend");
      if (p->index < 0 || p->index >= size()) throw DomainError("point index outside {0..N-1}");
      return;
    }
    case Backend::RationalRot: {
      auto* p = std::get_if<RotPoint>(&x);
      if (!p) throw DomainError("point kind does not match the rotation backend");
      if (p->angle < 0 || p->angle >= 1) throw DomainError("rotation point must lie in [0,1)");
      return;
    }
    case Backend::AperiodicOrbit: {
      if (!std::holds_alternative<OrbitPoint>(x))
        throw DomainError("point kind does not match the aperiodic orbit model");
      return;
    }
  }
}

std::string DynSystem::describe() const {
  std::ostringstream os;
  switch (backend()) {
    case Backend::FinitePerm:
      os << "finite_perm(N=" << size() << ")";
      break;
    case Backend::RationalRot:
      os << "rational_rotation(" << rotation().p << "/" << rotation().q << ")";
      break;
    case Backend::AperiodicOrbit:
      os << "aperiodic_orbit(window=" << orbit_model().window << ")";
      break;
  }
  return os.str();
}

bool Orbit::contains(const Point& x) const {
  if (infinite) return std::holds_alternative<OrbitPoint>(x);
  return std::find(points.begin(), points.end(), x) != points.end();
}

bool Orbit::same_orbit(const Orbit& o) const {
  if (infinite != o.infinite) return false;
  if (infinite) return true;
  if (points.size() != o.points.size()) return false;
  return !points.empty() && o.contains(points.front());
}

Point apply_sigma(const DynSystem& sys, const Point& x, long long n) {
  sys.check_point(x);
  switch (sys.backend()) {
    case Backend::FinitePerm: {
      const auto& perm = sys.finite_perm().perm;
      const int N = static_cast<int>(perm.size());
      int idx = std::get<PermPoint>(x).index;
      if (N == 0) throw DomainError("empty system has no points");
      // Reduce n modulo the point's cycle length by walking it once.
      long long len = 1;
      for (int j = perm[idx]; j != std::get<PermPoint>(x).index; j = perm[j]) ++len;
      long long steps = n % len;
      if (steps < 0) steps += len;
      for (long long s = 0; s < steps; ++s) idx = perm[idx];
      return PermPoint{idx};
    }
    case Backend::RationalRot: {
      const auto& rot = sys.rotation();
      Rational a = std::get<RotPoint>(x).angle + Rational(n) * Rational(rot.p, rot.q);
      return RotPoint{frac_mod1(a)};
    }
    case Backend::AperiodicOrbit:
      return OrbitPoint{std::get<OrbitPoint>(x).k + n};
  }
  throw DomainError("unreachable");
}

std::optional<long long> period(const DynSystem& sys, const Point& x) {
  sys.check_point(x);
  switch (sys.backend()) {
    case Backend::FinitePerm: {
      const auto& perm = sys.finite_perm().perm;
      const int start = std::get<PermPoint>(x).index;
      long long p = 1;
      for (int j = perm[start]; j != start; j = perm[j]) ++p;
      return p;
    }
    case Backend::RationalRot:
      // gcd(p, q) = 1 forces the full period q for every point.
      return sys.rotation().q;
    case Backend::AperiodicOrbit:
      return std::nullopt;
  }
  return std::nullopt;
}

Orbit orbit(const DynSystem& sys, const Point& x) {
  sys.check_point(x);
  Orbit o;
  o.system = sys;
  if (sys.backend() == Backend::AperiodicOrbit) {
    o.infinite = true;
    return o;
  }
  const long long p = *period(sys, x);
  o.points.reserve(static_cast<std::size_t>(p));
  Point cur = x;
  for (long long j = 0; j < p; ++j) {
    o.points.push_back(cur);
    cur = apply_sigma(sys, cur, 1);
  }
  return o;
}

std::vector<Orbit> orbit_space(const DynSystem& sys, const std::vector<Point>& samples) {
  switch (sys.backend()) {
    case Backend::FinitePerm: {
      std::vector<Orbit> out;
      std::vector<bool> seen(static_cast<std::size_t>(sys.size()), false);
      for (int i = 0; i < sys.size(); ++i) {
        if (seen[i]) continue;
        Orbit o = orbit(sys, PermPoint{i});
        for (const Point& pt : o.points) seen[std::get<PermPoint>(pt).index] = true;
        out.push_back(std::move(o));
      }
      return out;
    }
    case Backend::RationalRot: {
      std::vector<Orbit> out;
      std::set<Rational> labels;
      for (const Point& s : samples) {
        sys.check_point(s);
        Rational label = rotation_orbit_label(sys.rotation(), std::get<RotPoint>(s).angle);
        if (labels.insert(label).second) out.push_back(orbit(sys, s));
      }
      return out;
    }
    case Backend::AperiodicOrbit:
      throw DomainError("orbit_space is undefined on the aperiodic orbit model");
  }
  return {};
}

SystemPredicates system_predicates(const DynSystem& sys) {
  SystemPredicates out;
  switch (sys.backend()) {
    case Backend::FinitePerm: {
      const int n = sys.size();
      // Discrete topology: dense means equal, so Aper(sigma) = {} is dense
      // only for the empty system, and transitivity means a single orbit.
      out.free = (n == 0);
      out.topologically_free = (n == 0);
      out.topologically_transitive = orbit_space(sys).size() <= 1;
      return out;
    }
    case Backend::RationalRot:
      out.free = false;
      out.topologically_free = false;
      // no finite-data decision procedure; left unset
      return out;
    case Backend::AperiodicOrbit:
      out.free = true;
      out.topologically_free = true;
      return out;
  }
  return out;
}

Rational rotation_orbit_label(const RationalRotation& rot, const Rational& angle) {
  return frac_mod1(Rational(rot.q) * angle);
}

std::string point_to_string(const Point& x) {
  std::ostringstream os;
  if (auto* p = std::get_if<PermPoint>(&x)) {
    os << p->index;
  } else if (auto* r = std::get_if<RotPoint>(&x)) {
    os << numerator(r->angle) << "/" << denominator(r->angle);
  } else {
    os << std::get<OrbitPoint>(x).k;
  }
  return os.str();
}

}  // namespace ell1
