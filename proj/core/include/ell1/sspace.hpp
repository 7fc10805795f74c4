#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ell1/circleset.hpp"
#include "ell1/ideals.hpp"

namespace ell1 {

/// A set of primitive ideals over a finite permutation system: for each
/// orbit (keyed by its smallest point) the lambdas present, as a CircleSet.
/// Absent orbits carry the empty set.
class StructureSet {
public:
  StructureSet() = default;
  explicit StructureSet(std::map<int, CircleSet> parts);

  const std::map<int, CircleSet>& parts() const { return parts_; }
  CircleSet part(int orbit_key) const;
  void set_part(int orbit_key, CircleSet s);

  bool subset_of(const StructureSet& other) const;
  bool same_set(const StructureSet& other) const;

private:
  std::map<int, CircleSet> parts_;  // empty parts pruned
};

/// ell^1(Z) coefficient sequence whose Fourier series vanishes on a
/// prescribed closed circle subset and equals 1 at lambda0.
struct WienerWitness {
  std::map<long long, Complex> coeffs;
  double l1_norm = 0;
  double sup_on_forbidden = 0;  // dense-sample verification value
  Complex value_at_lambda0;
  long long truncation = 0;  // coefficients kept for |n| <= truncation
};

/// Margin required between lambda0 and the forbidden set (turns).
inline constexpr double kWitnessMargin = 1.0 / 64.0;

/// Builds the witness from a C^1 raised-cosine plateau equal to 1 at
/// lambda0 and 0 on the forbidden set (transition width = half the
/// margin), Fourier coefficients by periodic trapezoid quadrature on
/// 16384 points, truncated at the smallest order meeting `tol` on a dense
/// sample of the forbidden set and renormalized so that the series is
/// exactly 1 at lambda0.  Errors: margin violated (DomainError), maxN
/// insufficient (ToleranceError).
WienerWitness wiener_witness(const CircleSet& forbidden, double lambda0_angle, double tol,
                             long long max_n);

/// Evaluate the witness series at the given angle.
Complex witness_series(const WienerWitness& w, double angle);

/// Lift to the algebra: a_{lp+j} = c_l . (constant one) for j = 0..p-1,
/// so every strand sum at (orbit, lambda) equals the series value at
/// lambda.  Errors on infinite orbits.
AlgebraElement lift_witness(const DynSystem& sys, const Orbit& orbit, const WienerWitness& w);

struct ClosureCertificate {
  int orbit_key = 0;
  double lambda_angle = 0;        // the outside point being separated
  double max_on_set = 0;          // max |strand| over the set's lambdas
  double value_outside = 0;       // |strand| at the outside lambda
  AlgebraElement element;
};

struct ClosureResult {
  StructureSet closure;
  std::vector<ClosureCertificate> certificates;
};

/// Hull-kernel closure over a finite permutation system.  Finite unions
/// of closed arcs and points are already hull-kernel closed and distinct
/// orbits never exchange ideals, so the set comes back unchanged; with
/// `certify`, constructive separating elements (lifted Wiener witnesses
/// or orbit indicators) are produced for sampled outside points.
ClosureResult hk_closure(const DynSystem& sys, const StructureSet& e, bool certify = false,
                         double tol = 1e-3);

/// The ideals of all orbits inside an invariant point set S: full circle
/// on each orbit contained in S, empty elsewhere.
StructureSet closure_of_point_set(const DynSystem& sys, const std::vector<int>& subset);

struct StructureComponent {
  std::vector<int> orbit;  // point indices
  std::string space;       // "circle"
};

struct StructureDescription {
  std::string kind;  // "finite_perm" | "rational_rotation"
  std::vector<StructureComponent> components;          // finite permutation
  std::optional<long long> chart_q;                    // rotation: z -> z^q
  std::vector<std::array<double, 4>> chart_samples;    // (theta, lam) -> (q theta mod 1, lam)
};

/// Finite permutation: one circle component per orbit.  Rational
/// rotation: a single torus-times-torus chart through z -> z^q.
StructureDescription structure_space_describe(const DynSystem& sys);

}  // namespace ell1
