#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ell1/reps.hpp"

namespace ell1 {

/// Kernel of a finite dimensional representation: the pair (orbit, lambda).
struct PeriodicIdeal {
  Orbit orbit;
  Complex lambda;
};

/// Kernel of an aperiodic-point representation, identified by its orbit
/// closure: either the symbolic full orbit of the model, or a finite list
/// of sampled closure points.
struct AperiodicIdeal {
  bool full_orbit = false;
  std::vector<Point> closure_samples;
};

struct PrimitiveIdealId {
  DynSystem sys;
  std::variant<PeriodicIdeal, AperiodicIdeal> id;

  const PeriodicIdeal* periodic() const { return std::get_if<PeriodicIdeal>(&id); }
  const AperiodicIdeal* aperiodic() const { return std::get_if<AperiodicIdeal>(&id); }
};

PrimitiveIdealId make_periodic_ideal(const DynSystem& sys, const Point& x, Complex lambda);
PrimitiveIdealId make_aperiodic_ideal(const DynSystem& sys, std::vector<Point> closure_samples);
PrimitiveIdealId make_full_orbit_ideal(const DynSystem& sys);

/// Strand sums S_{j,x} = sum_l lambda^l f_{lp+j}(x) for j = 0..p-1 and x
/// running over the orbit; row j, column = orbit position.  Membership in
/// the periodic ideal is the vanishing of all of them.
std::vector<std::vector<Complex>> strand_sums(const AlgebraElement& a, const Orbit& orbit,
                                              Complex lambda);

/// Exact strand sums for a root-of-unity lambda, over Q(zeta): zero tests
/// are decided exactly.
std::vector<std::vector<CycNum>> strand_sums_exact(const AlgebraElement& a, const Orbit& orbit,
                                                   const RootOfUnity& lambda,
                                                   const CyclotomicField& field);

/// Largest |strand sum| (for diagnostics and tolerance checks).
double max_strand_modulus(const AlgebraElement& a, const Orbit& orbit, Complex lambda);

bool is_member(const AlgebraElement& a, const PrimitiveIdealId& id, double tol = 1e-9);

/// Exact membership in P_{orbit, lambda} for a root-of-unity lambda.
bool is_member_exact(const AlgebraElement& a, const Orbit& orbit, const RootOfUnity& lambda);

/// a in the intersection over all lambda, i.e. every coefficient vanishes
/// on the orbit; decided from the coefficients without sampling lambda.
bool is_member_all_lambda(const AlgebraElement& a, const Orbit& orbit, double tol = 0.0);

/// A primitive ideal not containing a (absent only for a = 0): orbits are
/// searched in enumeration order, and on the witnessing orbit a lambda
/// with a nonvanishing strand sum is found among the roots of unity of
/// order 4 (degree + 1); a nonzero strand polynomial of degree d cannot
/// vanish at more than d of them.
std::optional<PrimitiveIdealId> radical_witness(const DynSystem& sys, const AlgebraElement& a,
                                                double tol = 1e-9);

/// id1 contained in id2, decided by the inclusion rules: periodic in
/// periodic needs equal orbit and lambda; aperiodic in aperiodic or in
/// periodic needs closure(id1) containing closure(id2)/the orbit; a
/// periodic ideal is never contained in an aperiodic one.
bool ideal_inclusion(const PrimitiveIdealId& id1, const PrimitiveIdealId& id2,
                     double lambda_tol = 1e-9);

/// Membership of a and of a* agree for every primitive ideal; returns
/// whether the two memberships coincide.
bool selfadjointness_check(const AlgebraElement& a, const PrimitiveIdealId& id, double tol = 1e-9);

/// Union over orbits and sampled lambda of the eigenvalues of the
/// representation matrices, sorted lexicographically.  Representation
/// level only: finite permutation systems (or explicit orbit lists).
std::vector<Complex> spectrum_union(const DynSystem& sys, const AlgebraElement& a,
                                    int lambda_samples, const std::vector<Orbit>& orbits = {});

}  // namespace ell1
