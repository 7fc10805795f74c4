#pragma once

#include <vector>

#include "ell1/scalars.hpp"

namespace ell1 {

/// Closed arc on the circle, in fractions of a turn: lo <= t <= lo + len
/// (mod 1), with 0 <= lo < 1 and 0 <= len <= 1.
struct Arc {
  double lo = 0;
  double len = 0;
};

/// Finite union of closed arcs and isolated points on the unit circle.
/// Canonical after construction: arcs disjoint and sorted, points outside
/// every arc and sorted, full circle collapsed to a flag.  This class of
/// sets is closed under the operations used here and is hull-kernel closed
/// per the ell^1(Z) regularity argument.
class CircleSet {
public:
  CircleSet() = default;
  /// Arcs given as [lo, hi] with lo <= hi (hi may exceed 1 to wrap).
  CircleSet(const std::vector<std::pair<double, double>>& arcs, const std::vector<double>& points);

  static CircleSet empty() { return CircleSet(); }
  static CircleSet full();

  bool is_empty() const { return !full_ && arcs_.empty() && points_.empty(); }
  bool is_full() const { return full_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<double>& points() const { return points_; }

  bool contains(double angle) const;
  /// Distance from angle to the set in fractions of a turn (0 if inside,
  /// 1/2 bound; infinity-like 0.5 for empty handled by caller).
  double distance(double angle) const;
  bool subset_of(const CircleSet& other) const;
  bool same_set(const CircleSet& other) const;

  /// Deterministic sample of at least `count` angular positions covering
  /// arcs (endpoints included) and the isolated points.
  std::vector<double> sample(int count) const;

private:
  bool full_ = false;
  std::vector<Arc> arcs_;
  std::vector<double> points_;
};

}  // namespace ell1
