#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ell1/scalars.hpp"

namespace ell1 {

/// Finite set {0..N-1} with a permutation acting on it.
struct FinitePermutation {
  std::vector<int> perm;  // perm[i] = sigma(i); must be a bijection
};

/// Rotation of the circle by p/q of a turn, gcd(p, q) = 1.  Points are
/// exact rationals in [0, 1), so orbit identity is decidable.
struct RationalRotation {
  long long p = 1;
  long long q = 1;
};

/// One aperiodic orbit, modelled by its integer indices: the point k
/// stands for sigma^k applied to a fixed aperiodic base point, and
/// sigma acts as k -> k+1.  `window` is the default radius for
/// orbit-table functions living on this model.
struct AperiodicOrbitModel {
  int window = 64;
};

struct PermPoint {
  int index = 0;
  bool operator==(const PermPoint&) const = default;
};
struct RotPoint {
  Rational angle;  // in [0,1)
  bool operator==(const RotPoint&) const = default;
};
struct OrbitPoint {
  long long k = 0;
  bool operator==(const OrbitPoint&) const = default;
};

using Point = std::variant<PermPoint, RotPoint, OrbitPoint>;

enum class Backend { FinitePerm, RationalRot, AperiodicOrbit };

class DynSystem {
public:
  DynSystem() : backend_(FinitePermutation{}) {}
  explicit DynSystem(FinitePermutation fp);
  explicit DynSystem(RationalRotation rr);
  explicit DynSystem(AperiodicOrbitModel am);

  Backend backend() const;
  const FinitePermutation& finite_perm() const;
  const RationalRotation& rotation() const;
  const AperiodicOrbitModel& orbit_model() const;

  /// Number of points for the finite backend.
  int size() const;

  bool operator==(const DynSystem& o) const;
  bool same_system(const DynSystem& o) const { return *this == o; }

  /// Throws DomainError if x does not belong to this system's domain.
  void check_point(const Point& x) const;

  std::string describe() const;

private:
  std::variant<FinitePermutation, RationalRotation, AperiodicOrbitModel> backend_;
};

/// Ordered finite orbit [x, sigma x, ..., sigma^{p-1} x], or the symbolic
/// infinite orbit of an aperiodic model point.
struct Orbit {
  DynSystem system;
  std::vector<Point> points;  // empty when infinite
  bool infinite = false;

  std::size_t size() const { return points.size(); }
  bool contains(const Point& x) const;
  bool same_orbit(const Orbit& o) const;
};

struct SystemPredicates {
  std::optional<bool> free;
  std::optional<bool> topologically_free;
  std::optional<bool> topologically_transitive;
};

/// sigma^n(x), exact on every backend.
Point apply_sigma(const DynSystem& sys, const Point& x, long long n);

/// Smallest p >= 1 with sigma^p x = x, or nullopt for aperiodic points.
std::optional<long long> period(const DynSystem& sys, const Point& x);

Orbit orbit(const DynSystem& sys, const Point& x);

/// Partition of the point set into orbits (finite permutation), or the
/// orbits of the given sample points deduplicated through the z -> z^q
/// labelling (rational rotation).  Errors on the aperiodic model.
std::vector<Orbit> orbit_space(const DynSystem& sys,
                               const std::vector<Point>& samples = {});

SystemPredicates system_predicates(const DynSystem& sys);

/// Exact orbit label for a rotation point: q * theta mod 1 (z -> z^q chart).
Rational rotation_orbit_label(const RationalRotation& rot, const Rational& angle);

std::string point_to_string(const Point& x);

}  // namespace ell1
