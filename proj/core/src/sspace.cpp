#include "ell1/sspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ell1 {

namespace {

constexpr int kQuadraturePoints = 16384;  // power of two, periodic trapezoid
constexpr int kVerifySamples = 8192;

// In-place iterative radix-2 FFT (forward: e^{-2 pi i jk/n}).
void fft(std::vector<Complex>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const Complex wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        Complex u = a[i + j], v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

double raised_cosine_ramp(double t) {  // C^1: s(0)=0, s(1)=1, s'(0)=s'(1)=0
  return 0.5 * (1.0 - std::cos(std::numbers::pi * t));
}

Complex series_at(const std::map<long long, Complex>& coeffs, double angle) {
  Complex acc(0.0, 0.0);
  for (const auto& [n, c] : coeffs) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(n) * angle;
    acc += c * Complex(std::cos(phi), std::sin(phi));
  }
  return acc;
}

int orbit_key_of(const Orbit& o) {
  int key = std::get<PermPoint>(o.points.front()).index;
  for (const Point& x : o.points) key = std::min(key, std::get<PermPoint>(x).index);
  return key;
}

}  // namespace

StructureSet::StructureSet(std::map<int, CircleSet> parts) {
  for (auto& [k, s] : parts)
    if (!s.is_empty()) parts_.emplace(k, std::move(s));
}

CircleSet StructureSet::part(int orbit_key) const {
  auto it = parts_.find(orbit_key);
  return it == parts_.end() ? CircleSet::empty() : it->second;
}

void StructureSet::set_part(int orbit_key, CircleSet s) {
  if (s.is_empty())
    parts_.erase(orbit_key);
  else
    parts_.insert_or_assign(orbit_key, std::move(s));
}

bool StructureSet::subset_of(const StructureSet& other) const {
  return std::all_of(parts_.begin(), parts_.end(), [&](const auto& kv) {
    return kv.second.subset_of(other.part(kv.first));
  });
}

bool StructureSet::same_set(const StructureSet& other) const {
  return subset_of(other) && other.subset_of(*this);
}

WienerWitness wiener_witness(const CircleSet& forbidden, double lambda0_angle, double tol,
                             long long max_n) {
  if (forbidden.is_full()) throw DomainError("forbidden set must not be the full circle");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (forbidden.distance(lambda0_angle) < kWitnessMargin - 1e-12)
    throw DomainError("lambda0 is closer to the forbidden set than the margin");
  if (max_n < 1 || max_n >= kQuadraturePoints / 2)
    throw DomainError("truncation order out of range");

  // Plateau: 0 on the forbidden set, ramping to 1 over half the margin.
  const double width = kWitnessMargin / 2.0;
  std::vector<Complex> grid(kQuadraturePoints);
  for (int k = 0; k < kQuadraturePoints; ++k) {
    const double theta = static_cast<double>(k) / kQuadraturePoints;
    const double d = forbidden.distance(theta);
    grid[static_cast<std::size_t>(k)] = raised_cosine_ramp(std::min(d, width) / width);
  }
  fft(grid);  // c_n = grid[n mod M] / M

  auto coeff = [&](long long n) {
    long long idx = ((n % kQuadraturePoints) + kQuadraturePoints) % kQuadraturePoints;
    return grid[static_cast<std::size_t>(idx)] / static_cast<double>(kQuadraturePoints);
  };

  // Smallest truncation with computed coefficient tail below tol/2.
  std::vector<double> tail(static_cast<std::size_t>(max_n) + 2, 0.0);
  for (long long n = max_n; n >= 1; --n)
    tail[static_cast<std::size_t>(n)] =
        tail[static_cast<std::size_t>(n) + 1] + std::abs(coeff(n)) + std::abs(coeff(-n));
  long long n_trunc = max_n;
  for (long long n = 1; n <= max_n; ++n) {
    if (tail[static_cast<std::size_t>(n) + 1] <= tol / 2) {
      n_trunc = n;
      break;
    }
  }

  const std::vector<double> verify_angles = forbidden.sample(kVerifySamples);
  while (true) {
    WienerWitness w;
    w.truncation = n_trunc;
    for (long long n = -n_trunc; n <= n_trunc; ++n) {
      const Complex c = coeff(n);
      if (c != Complex(0.0, 0.0)) w.coeffs[n] = c;
    }
    const Complex v0 = series_at(w.coeffs, lambda0_angle);
    if (std::abs(v0) > 0.5) {  // plateau value is ~1 at lambda0
      const Complex inv = Complex(1.0, 0.0) / v0;
      for (auto& [n, c] : w.coeffs) c *= inv;
      double sup = 0.0;
      for (double t : verify_angles) sup = std::max(sup, std::abs(series_at(w.coeffs, t)));
      if (sup <= tol || verify_angles.empty()) {
        std::vector<double> mags;
        mags.reserve(w.coeffs.size());
        for (const auto& [n, c] : w.coeffs) mags.push_back(std::abs(c));
        std::sort(mags.begin(), mags.end());
        w.l1_norm = 0.0;
        for (double m : mags) w.l1_norm += m;
        w.sup_on_forbidden = sup;
        w.value_at_lambda0 = series_at(w.coeffs, lambda0_angle);
        return w;
      }
    }
    if (n_trunc >= max_n)
      throw ToleranceError("truncation order maxN is insufficient for the requested tolerance");
    n_trunc = std::min(max_n, n_trunc + n_trunc / 3 + 16);
  }
}

Complex witness_series(const WienerWitness& w, double angle) { return series_at(w.coeffs, angle); }

AlgebraElement lift_witness(const DynSystem& sys, const Orbit& orbit, const WienerWitness& w) {
  if (orbit.infinite || orbit.points.empty())
    throw DomainError("witness lift requires a finite orbit");
  if (!(orbit.system == sys)) throw DomainError("orbit belongs to another system");
  const long long p = static_cast<long long>(orbit.points.size());
  std::map<long long, FunctionOnX> coeffs;
  for (const auto& [l, c] : w.coeffs)
    for (long long j = 0; j < p; ++j)
      coeffs.emplace(l * p + j, FunctionOnX::constant(sys, c));
  return AlgebraElement(sys, std::move(coeffs));
}

ClosureResult hk_closure(const DynSystem& sys, const StructureSet& e, bool certify, double tol) {
  if (sys.backend() != Backend::FinitePerm)
    throw DomainError("hull-kernel closure is computed over finite permutation systems");
  const std::vector<Orbit> orbits = orbit_space(sys);
  std::map<int, const Orbit*> by_key;
  for (const Orbit& o : orbits) by_key.emplace(orbit_key_of(o), &o);
  for (const auto& [key, part] : e.parts())
    if (!by_key.contains(key)) throw DomainError("structure set references a missing orbit");

  // Arcs-and-points circle subsets are hull-kernel closed per orbit, and no
  // ideal of one orbit contains an ideal of another, so E is its closure.
  ClosureResult out{e, {}};
  if (!certify) return out;

  for (const auto& [key, o] : by_key) {
    const CircleSet part = e.part(key);
    if (part.is_full()) continue;
    for (int s = 0; s < 8; ++s) {
      const double angle = static_cast<double>(s) / 8.0;
      if (part.distance(angle) < kWitnessMargin) continue;

      AlgebraElement elem = AlgebraElement::zero(sys);
      const FunctionOnX chi_orbit = [&] {
        FunctionOnX acc = FunctionOnX::constant(sys, GaussianRational(0));
        for (const Point& x : o->points) acc = acc + FunctionOnX::indicator(sys, x);
        return acc;
      }();
      if (part.is_empty()) {
        elem = AlgebraElement::embed_function(chi_orbit);
      } else {
        const WienerWitness w = wiener_witness(part, angle, tol, 1800);
        AlgebraElement lifted = lift_witness(sys, *o, w);
        std::map<long long, FunctionOnX> masked;
        for (const auto& [n, f] : lifted.coefficients()) masked.emplace(n, f * chi_orbit);
        elem = AlgebraElement(sys, std::move(masked));
      }

      ClosureCertificate cert;
      cert.orbit_key = key;
      cert.lambda_angle = angle;
      cert.element = elem;
      cert.value_outside = max_strand_modulus(elem, *o, unit_phase(rational_from_double(angle)));
      double worst = 0.0;
      for (const auto& [key2, o2] : by_key) {
        const CircleSet part2 = e.part(key2);
        if (part2.is_empty()) continue;
        for (double t : part2.sample(64))
          worst = std::max(worst,
                           max_strand_modulus(elem, *o2, unit_phase(rational_from_double(t))));
      }
      cert.max_on_set = worst;
      out.certificates.push_back(std::move(cert));
      break;  // one certificate per orbit is enough evidence
    }
  }
  return out;
}

StructureSet closure_of_point_set(const DynSystem& sys, const std::vector<int>& subset) {
  if (sys.backend() != Backend::FinitePerm)
    throw DomainError("point-set closures are computed over finite permutation systems");
  const auto& perm = sys.finite_perm().perm;
  std::vector<bool> in_set(static_cast<std::size_t>(sys.size()), false);
  for (int i : subset) {
    if (i < 0 || i >= sys.size()) throw DomainError("subset point outside the system");
    in_set[static_cast<std::size_t>(i)] = true;
  }
  for (int i = 0; i < sys.size(); ++i)
    if (in_set[static_cast<std::size_t>(i)] != in_set[static_cast<std::size_t>(perm[i])])
      throw DomainError("subset is not invariant under sigma");

  StructureSet out;
  for (const Orbit& o : orbit_space(sys)) {
    const int key = orbit_key_of(o);
    if (in_set[static_cast<std::size_t>(key)]) out.set_part(key, CircleSet::full());
  }
  return out;
}

StructureDescription structure_space_describe(const DynSystem& sys) {
  StructureDescription out;
  switch (sys.backend()) {
    case Backend::FinitePerm: {
      out.kind = "finite_perm";
      for (const Orbit& o : orbit_space(sys)) {
        StructureComponent comp;
        for (const Point& x : o.points) comp.orbit.push_back(std::get<PermPoint>(x).index);
        comp.space = "circle";
        out.components.push_back(std::move(comp));
      }
      return out;
    }
    case Backend::RationalRot: {
      out.kind = "rational_rotation";
      const long long q = sys.rotation().q;
      out.chart_q = q;
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
          const double theta = i / 8.0;
          const double lam = j / 8.0;
          out.chart_samples.push_back(
              {theta, lam, to_double(frac_mod1(Rational(q) * Rational(i, 8))), lam});
        }
      return out;
    }
    case Backend::AperiodicOrbit:
      throw DomainError("structure description covers the periodic backends");
  }
  throw DomainError("unreachable");
}

}  // namespace ell1
