#include "ell1/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ell1/parallel.hpp"

namespace ell1 {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

Complex int_power(Complex z, long long k) {
  if (k < 0) {
    z = Complex(1.0, 0.0) / z;
    k = -k;
  }
  Complex acc(1.0, 0.0);
  for (long long i = 0; i < k; ++i) acc *= z;
  return acc;
}

void check_finite_orbit(const Orbit& o) {
  if (o.infinite || o.points.empty())
    throw DomainError("strand sums require a finite orbit");
}

}  // namespace

PrimitiveIdealId make_periodic_ideal(const DynSystem& sys, const Point& x, Complex lambda) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
    throw DomainError("lambda must be unimodular (|lambda| = 1 within 1e-12)");
  Orbit o = orbit(sys, x);
  if (o.infinite) throw DomainError("periodic ideals require a finite orbit");
  return PrimitiveIdealId{sys, PeriodicIdeal{std::move(o), lambda}};
}

PrimitiveIdealId make_aperiodic_ideal(const DynSystem& sys, std::vector<Point> closure_samples) {
  for (const Point& x : closure_samples) sys.check_point(x);
  std::sort(closure_samples.begin(), closure_samples.end(),
            [](const Point& a, const Point& b) {
              return point_to_string(a) < point_to_string(b);
            });
  closure_samples.erase(std::unique(closure_samples.begin(), closure_samples.end()),
                        closure_samples.end());
  if (closure_samples.empty()) throw DomainError("closure sample list must be non-empty");
  return PrimitiveIdealId{sys, AperiodicIdeal{false, std::move(closure_samples)}};
}

PrimitiveIdealId make_full_orbit_ideal(const DynSystem& sys) {
  if (sys.backend() != Backend::AperiodicOrbit)
    throw DomainError("the symbolic full-orbit ideal lives on the aperiodic model");
  return PrimitiveIdealId{sys, AperiodicIdeal{true, {}}};
}

std::vector<std::vector<Complex>> strand_sums(const AlgebraElement& a, const Orbit& orbit,
                                              Complex lambda) {
  check_finite_orbit(orbit);
  if (!(a.system() == orbit.system)) throw DomainError("element and orbit system mismatch");
  const long long p = static_cast<long long>(orbit.points.size());
  std::vector<std::vector<Complex>> sums(static_cast<std::size_t>(p),
                                         std::vector<Complex>(orbit.points.size(), Complex(0, 0)));
  for (const auto& [n, f] : a.coefficients()) {
    const long long j = ((n % p) + p) % p;
    const long long l = floor_div(n, p);
    const Complex lpow = int_power(lambda, l);
    for (std::size_t col = 0; col < orbit.points.size(); ++col)
      sums[static_cast<std::size_t>(j)][col] += lpow * f.evaluate(orbit.points[col]);
  }
  return sums;
}

std::vector<std::vector<CycNum>> strand_sums_exact(const AlgebraElement& a, const Orbit& orbit,
                                                   const RootOfUnity& lambda,
                                                   const CyclotomicField& field) {
  check_finite_orbit(orbit);
  if (!(a.system() == orbit.system)) throw DomainError("element and orbit system mismatch");
  if (field.order() % lambda.order != 0)
    throw DomainError("field order must contain the root order");
  const long long step = field.order() / lambda.order * lambda.k;
  const long long p = static_cast<long long>(orbit.points.size());
  std::vector<std::vector<CycNum>> sums(
      static_cast<std::size_t>(p),
      std::vector<CycNum>(orbit.points.size(), CycNum::zero(field)));
  for (const auto& [n, f] : a.coefficients()) {
    const long long j = ((n % p) + p) % p;
    const long long l = floor_div(n, p);
    const CycNum lpow = CycNum::root_power(field, l * step);
    for (std::size_t col = 0; col < orbit.points.size(); ++col) {
      auto fv = f.evaluate_exact(orbit.points[col]);
      if (!fv) throw DomainError("exact strand sums need exactly evaluable coefficients");
      if (fv->is_zero()) continue;
      sums[static_cast<std::size_t>(j)][col] =
          sums[static_cast<std::size_t>(j)][col] + lpow * CycNum::from_gaussian(field, *fv);
    }
  }
  return sums;
}

double max_strand_modulus(const AlgebraElement& a, const Orbit& orbit, Complex lambda) {
  double best = 0.0;
  for (const auto& row : strand_sums(a, orbit, lambda))
    for (const Complex& s : row) best = std::max(best, std::abs(s));
  return best;
}

namespace {

bool coefficients_vanish_at(const AlgebraElement& a, const Point& x, double tol) {
  for (const auto& [n, f] : a.coefficients()) {
    if (auto ex = f.evaluate_exact(x)) {
      if (tol == 0.0) {
        if (!ex->is_zero()) return false;
      } else if (std::abs(ex->to_complex()) > tol) {
        return false;
      }
    } else if (std::abs(f.evaluate(x)) > tol) {
      return false;
    }
  }
  return true;
}

bool coefficients_vanish_everywhere(const AlgebraElement& a, double tol) {
  for (const auto& [n, f] : a.coefficients()) {
    if (tol == 0.0) {
      if (!f.is_zero()) return false;
    } else if (f.sup_norm() > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_member(const AlgebraElement& a, const PrimitiveIdealId& id, double tol) {
  if (!(a.system() == id.sys)) throw DomainError("element and ideal system mismatch");
  if (const PeriodicIdeal* per = id.periodic())
    return max_strand_modulus(a, per->orbit, per->lambda) <= tol;
  const AperiodicIdeal& ap = *id.aperiodic();
  if (ap.full_orbit) return coefficients_vanish_everywhere(a, tol);
  return std::all_of(ap.closure_samples.begin(), ap.closure_samples.end(),
                     [&](const Point& x) { return coefficients_vanish_at(a, x, tol); });
}

bool is_member_exact(const AlgebraElement& a, const Orbit& orbit, const RootOfUnity& lambda) {
  const long long m = std::lcm(lambda.order, 4ll);
  CyclotomicField field(m);
  for (const auto& row : strand_sums_exact(a, orbit, RootOfUnity(lambda.k * (m / lambda.order), m),
                                           field))
    for (const CycNum& s : row)
      if (!s.is_zero()) return false;
  return true;
}

bool is_member_all_lambda(const AlgebraElement& a, const Orbit& orbit, double tol) {
  check_finite_orbit(orbit);
  if (!(a.system() == orbit.system)) throw DomainError("element and orbit system mismatch");
  return std::all_of(orbit.points.begin(), orbit.points.end(),
                     [&](const Point& x) { return coefficients_vanish_at(a, x, tol); });
}

std::optional<PrimitiveIdealId> radical_witness(const DynSystem& sys, const AlgebraElement& a,
                                                double tol) {
  if (!(a.system() == sys)) throw DomainError("element and system mismatch");
  if (a.is_zero()) return std::nullopt;

  if (sys.backend() == Backend::AperiodicOrbit) {
    // The model is one dense orbit; any nonzero element misses its ideal.
    return make_full_orbit_ideal(sys);
  }

  std::vector<Orbit> orbits;
  if (sys.backend() == Backend::FinitePerm) {
    orbits = orbit_space(sys);
  } else {
    // rotation backend: candidate orbits through the angles appearing in
    // the support of the coefficients cannot be enumerated; a single
    // sampled orbit through 0 plus the coefficient data decides nothing
    // exact here, so restrict to finite systems.
    throw DomainError("radical_witness needs the finite permutation or orbit model backend");
  }

  for (const Orbit& o : orbits) {
    if (is_member_all_lambda(a, o, tol)) continue;
    // Strand polynomials have degree span <= d; 4 (d+1) roots of unity
    // cannot all be zeros of a nonzero one.
    const long long p = static_cast<long long>(o.points.size());
    long long lmin = 0, lmax = 0;
    bool first = true;
    for (const auto& [n, f] : a.coefficients()) {
      const long long l = floor_div(n, p);
      lmin = first ? l : std::min(lmin, l);
      lmax = first ? l : std::max(lmax, l);
      first = false;
    }
    const long long degree = lmax - lmin;
    const long long samples = 4 * (degree + 1);
    for (long long k = 0; k < samples; ++k) {
      const Complex lambda = unit_phase(Rational(k, samples));
      if (max_strand_modulus(a, o, lambda) > tol)
        return PrimitiveIdealId{sys, PeriodicIdeal{o, lambda}};
    }
  }
  return std::nullopt;
}

namespace {

bool point_set_contains(const std::vector<Point>& big, const std::vector<Point>& small) {
  return std::all_of(small.begin(), small.end(), [&](const Point& x) {
    return std::find(big.begin(), big.end(), x) != big.end();
  });
}

}  // namespace

bool ideal_inclusion(const PrimitiveIdealId& id1, const PrimitiveIdealId& id2,
                     double lambda_tol) {
  if (!(id1.sys == id2.sys)) throw DomainError("ideals live over different systems");
  const PeriodicIdeal* p1 = id1.periodic();
  const PeriodicIdeal* p2 = id2.periodic();
  if (p1 && p2)
    return p1->orbit.same_orbit(p2->orbit) && std::abs(p1->lambda - p2->lambda) <= lambda_tol;
  if (p1 && !p2) return false;  // a maximal finite-dimensional kernel never sits inside
  const AperiodicIdeal& a1 = *id1.aperiodic();
  if (a1.full_orbit) return true;  // the whole orbit contains every sampled closure
  if (p2) return point_set_contains(a1.closure_samples, p2->orbit.points);
  const AperiodicIdeal& a2 = *id2.aperiodic();
  if (a2.full_orbit) return false;
  return point_set_contains(a1.closure_samples, a2.closure_samples);
}

bool selfadjointness_check(const AlgebraElement& a, const PrimitiveIdealId& id, double tol) {
  return is_member(a, id, tol) == is_member(a.involution(), id, tol);
}

std::vector<Complex> spectrum_union(const DynSystem& sys, const AlgebraElement& a,
                                    int lambda_samples, const std::vector<Orbit>& orbits_in) {
  if (lambda_samples < 1) throw DomainError("need at least one lambda sample");
  if (sys.backend() == Backend::AperiodicOrbit)
    throw DomainError("spectrum_union needs periodic points");
  std::vector<Orbit> orbits = orbits_in;
  if (orbits.empty()) {
    if (sys.backend() != Backend::FinitePerm)
      throw DomainError("spectrum_union needs explicit orbits on the rotation backend");
    orbits = orbit_space(sys);
  }

  std::vector<std::vector<Complex>> per_sample(static_cast<std::size_t>(lambda_samples));
  parallel_for(lambda_samples, [&](int k) {
    std::vector<Complex> acc;
    const Complex lambda = unit_phase(Rational(k, lambda_samples));
    for (const Orbit& o : orbits) {
      PeriodicRep rep = make_periodic_rep(sys, o.points.front(), lambda);
      for (const Complex& ev : eigenvalues(periodic_rep_matrix(rep, a))) acc.push_back(ev);
    }
    per_sample[static_cast<std::size_t>(k)] = std::move(acc);
  });

  std::vector<Complex> out;
  for (const auto& chunk : per_sample) out.insert(out.end(), chunk.begin(), chunk.end());
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace ell1
