#include "ell1/circleset.hpp"

#include <algorithm>
#include <cmath>

namespace ell1 {

namespace {

double mod1(double t) {
  double f = t - std::floor(t);
  return f >= 1.0 ? 0.0 : f;
}

// Distance between two angles on the circle, in turns (<= 0.5).
double circ_dist(double a, double b) {
  double d = std::fabs(mod1(a) - mod1(b));
  return std::min(d, 1.0 - d);
}

bool arc_contains(const Arc& a, double t) {
  const double rel = mod1(t - a.lo);
  return rel <= a.len + 1e-15 || rel >= 1.0 - 1e-15;
}

double arc_distance(const Arc& a, double t) {
  if (arc_contains(a, t)) return 0.0;
  return std::min(circ_dist(t, a.lo), circ_dist(t, a.lo + a.len));
}

}  // namespace

CircleSet CircleSet::full() {
  CircleSet s;
  s.full_ = true;
  return s;
}

CircleSet::CircleSet(const std::vector<std::pair<double, double>>& arcs,
                     const std::vector<double>& points) {
  std::vector<Arc> raw;
  for (const auto& [lo, hi] : arcs) {
    if (hi < lo) throw DomainError("arc must satisfy lo <= hi");
    if (hi - lo >= 1.0) {
      full_ = true;
      return;
    }
    raw.push_back(Arc{mod1(lo), hi - lo});
  }
  // Merge overlapping or touching arcs (wraparound included).
  std::sort(raw.begin(), raw.end(), [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
  std::vector<Arc> merged;
  for (const Arc& a : raw) {
    if (!merged.empty()) {
      Arc& last = merged.back();
      if (a.lo <= last.lo + last.len + 1e-15) {
        last.len = std::max(last.len, a.lo + a.len - last.lo);
        continue;
      }
    }
    merged.push_back(a);
  }
  // Fold a tail arc that wraps past 1 into the leading ones.
  while (merged.size() > 1) {
    Arc& last = merged.back();
    const Arc& first = merged.front();
    if (last.lo + last.len >= first.lo + 1.0 - 1e-15) {
      const double hi = std::max(last.lo + last.len, first.lo + 1.0 + first.len);
      last.len = hi - last.lo;
      merged.erase(merged.begin());
    } else {
      break;
    }
  }
  if (merged.size() == 1 && merged.front().len >= 1.0 - 1e-15) {
    full_ = true;
    return;
  }
  arcs_ = std::move(merged);

  for (double p : points) {
    const double t = mod1(p);
    const bool inside =
        std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return arc_contains(a, t); });
    if (!inside) points_.push_back(t);
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end(),
                            [](double a, double b) { return circ_dist(a, b) < 1e-15; }),
                points_.end());
}

bool CircleSet::contains(double angle) const {
  if (full_) return true;
  const double t = mod1(angle);
  if (std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return arc_contains(a, t); }))
    return true;
  return std::any_of(points_.begin(), points_.end(),
                     [&](double p) { return circ_dist(p, t) < 1e-15; });
}

double CircleSet::distance(double angle) const {
  if (full_) return 0.0;
  if (is_empty()) return 0.5;
  double best = 0.5;
  for (const Arc& a : arcs_) best = std::min(best, arc_distance(a, angle));
  for (double p : points_) best = std::min(best, circ_dist(p, angle));
  return best;
}

bool CircleSet::subset_of(const CircleSet& other) const {
  if (other.full_) return true;
  if (full_) return false;
  for (const Arc& a : arcs_) {
    // a must sit inside a single arc of `other` (points cannot cover arcs)
    bool covered = false;
    for (const Arc& b : other.arcs_) {
      const double rel = mod1(a.lo - b.lo);
      if ((rel <= b.len + 1e-12 || rel >= 1.0 - 1e-12) && mod1(a.lo - b.lo) + a.len <= b.len + 1e-12) {
        covered = true;
        break;
      }
    }
    if (!covered && a.len == 0.0) covered = other.contains(a.lo);
    if (!covered) return false;
  }
  return std::all_of(points_.begin(), points_.end(),
                     [&](double p) { return other.contains(p); });
}

bool CircleSet::same_set(const CircleSet& other) const {
  return subset_of(other) && other.subset_of(*this);
}

std::vector<double> CircleSet::sample(int count) const {
  std::vector<double> out;
  if (full_) {
    for (int i = 0; i < count; ++i) out.push_back(static_cast<double>(i) / count);
    return out;
  }
  double total = 0.0;
  for (const Arc& a : arcs_) total += a.len;
  for (const Arc& a : arcs_) {
    out.push_back(mod1(a.lo));
    if (a.len > 0) {
      const int n = std::max(2, total > 0 ? static_cast<int>(count * (a.len / total)) : 2);
      for (int i = 1; i <= n; ++i) out.push_back(mod1(a.lo + a.len * i / n));
    }
  }
  out.insert(out.end(), points_.begin(), points_.end());
  return out;
}

}  // namespace ell1
