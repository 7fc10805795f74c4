#pragma once

// Shared generators and independent oracles for the test suites.  The
// oracles here recompute expected values from first principles and must
// stay independent of the library code paths they check.

#include <map>
#include <random>
#include <vector>

#include "ell1/algebra.hpp"
#include "ell1/reps.hpp"

namespace testsup {

using namespace ell1;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_num = 8, int max_den = 8) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline GaussianRational random_value(Rng& rng) {
  return {random_rational(rng), random_rational(rng)};
}

inline DynSystem random_perm_system(Rng& rng, int max_points = 10, int min_points = 1) {
  std::uniform_int_distribution<int> size(min_points, max_points);
  const int n = size(rng);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(pick(rng))]);
  }
  return DynSystem(FinitePermutation{perm});
}

inline FunctionOnX random_function(Rng& rng, const DynSystem& sys) {
  switch (sys.backend()) {
    case Backend::FinitePerm: {
      DenseTable t;
      for (int i = 0; i < sys.size(); ++i) t.values.push_back(random_value(rng));
      return FunctionOnX(sys, std::move(t));
    }
    case Backend::RationalRot: {
      TrigPolynomial t;
      std::uniform_int_distribution<int> deg(-3, 3);
      std::uniform_real_distribution<double> coeff(-2.0, 2.0);
      for (int i = 0; i < 3; ++i) t.coeffs[deg(rng)] += Complex(coeff(rng), coeff(rng));
      return FunctionOnX(sys, std::move(t));
    }
    case Backend::AperiodicOrbit: {
      OrbitTable t;
      std::uniform_int_distribution<long long> lo(-4, 0);
      t.lo = lo(rng);
      for (int i = 0; i < 5; ++i) t.values.push_back(random_value(rng));
      return FunctionOnX(sys, std::move(t));
    }
  }
  throw DomainError("unreachable");
}

inline AlgebraElement random_element(Rng& rng, const DynSystem& sys, int support_radius = 3,
                                     int terms = 3) {
  std::uniform_int_distribution<int> n(-support_radius, support_radius);
  AlgebraElement a(sys);
  for (int i = 0; i < terms; ++i) {
    std::map<long long, FunctionOnX> one;
    one.emplace(n(rng), random_function(rng, sys));
    a = a + AlgebraElement(sys, std::move(one));
  }
  return a;
}

inline SeqVector random_seq_vector(Rng& rng, int radius, int terms, double p = 1.0) {
  std::uniform_int_distribution<long long> idx(-radius, radius);
  SeqVector v(p);
  for (int i = 0; i < terms; ++i) v.set(idx(rng), random_value(rng));
  return v;
}

// --- Laurent polynomial oracle (one-point systems) ---

using Laurent = std::map<long long, GaussianRational>;

inline Laurent laurent_of(const AlgebraElement& a) {
  Laurent out;
  for (const auto& [n, f] : a.coefficients()) {
    auto v = f.evaluate_exact(PermPoint{0});
    if (v && !v->is_zero()) out[n] = *v;
  }
  return out;
}

inline Laurent laurent_multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [n, x] : a)
    for (const auto& [m, y] : b) {
      auto [it, fresh] = out.emplace(n + m, x * y);
      if (!fresh) it->second = it->second + x * y;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline Laurent laurent_star(const Laurent& a) {
  Laurent out;
  for (const auto& [n, x] : a)
    if (!x.is_zero()) out[-n] = x.conj();
  return out;
}

// --- exact norm bounds ---

struct NormBounds {
  Rational lower;
  Rational upper;
};

// Certified rational enclosure of sum_n sup|f_n| for exactly represented
// elements.
inline NormBounds one_norm_bounds(const AlgebraElement& a) {
  auto sups = a.sup_norms_squared_exact();
  if (!sups) throw DomainError("norm bounds need exactly represented elements");
  NormBounds out{Rational(0), Rational(0)};
  for (const auto& [n, sq] : *sups) {
    const SqrtBounds b = rational_sqrt_bounds(sq);
    out.lower += b.lower;
    out.upper += b.upper;
  }
  return out;
}

// Sorted squared sup multiset; equal multisets mean equal norms, exactly.
inline std::vector<Rational> norm_multiset(const AlgebraElement& a) {
  auto sups = a.sup_norms_squared_exact();
  if (!sups) throw DomainError("norm multisets need exactly represented elements");
  std::vector<Rational> out;
  for (const auto& [n, sq] : *sups) out.push_back(sq);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testsup
