#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "ell1/dynsys.hpp"
#include "ell1/scalars.hpp"

namespace ell1 {

/// One exact complex value per point of a finite permutation system.
struct DenseTable {
  std::vector<GaussianRational> values;
};

/// Finitely many Fourier coefficients c_m of sum_m c_m e^{2 pi i m theta},
/// for the rational rotation backend.  Exact zeros are pruned.
struct TrigPolynomial {
  std::map<long long, Complex> coeffs;
};

/// Values on orbit indices in [lo, lo+values.size()), `background`
/// elsewhere.  Background 0 is the window functions of the solver path;
/// nonzero background covers the constants (unit element, scalar series).
struct OrbitTable {
  GaussianRational background;
  long long lo = 0;
  std::vector<GaussianRational> values;
};

/// An evaluable function on X with computable sup-norm, matched to the
/// system backend.  Values are exact on the table backends and double
/// precision on the rotation backend.
class FunctionOnX {
public:
  FunctionOnX() = default;
  FunctionOnX(DynSystem sys, DenseTable t);
  FunctionOnX(DynSystem sys, TrigPolynomial t);
  FunctionOnX(DynSystem sys, OrbitTable t);

  static FunctionOnX constant(const DynSystem& sys, const GaussianRational& c);
  static FunctionOnX constant(const DynSystem& sys, Complex c);
  /// Indicator of a single point (finite permutation or orbit model).
  static FunctionOnX indicator(const DynSystem& sys, const Point& x);

  const DynSystem& system() const { return sys_; }
  bool is_zero() const;

  Complex evaluate(const Point& x) const;
  /// Exact value where the representation is exact (tables); nullopt on trig.
  std::optional<GaussianRational> evaluate_exact(const Point& x) const;

  /// Exact on the table backends; a grid maximum (never an overestimate
  /// of the true supremum) on the rotation backend.
  double sup_norm() const;
  /// sup^2 as an exact rational, when the representation is exact.
  std::optional<Rational> sup_norm_squared_exact() const;

  /// alpha^n(f) = f o sigma^{-n}; sup-norm preserved.
  FunctionOnX alpha_power(long long n) const;
  FunctionOnX conj() const;

  FunctionOnX operator+(const FunctionOnX& o) const;
  FunctionOnX operator-(const FunctionOnX& o) const;
  FunctionOnX operator*(const FunctionOnX& o) const;  // pointwise
  FunctionOnX scaled(const GaussianRational& c) const;
  FunctionOnX scaled(Complex c) const;

  bool exact() const;

  const DenseTable* as_table() const { return std::get_if<DenseTable>(&repr_); }
  const TrigPolynomial* as_trig() const { return std::get_if<TrigPolynomial>(&repr_); }
  const OrbitTable* as_orbit_table() const { return std::get_if<OrbitTable>(&repr_); }

  bool equals_exact(const FunctionOnX& o) const;

private:
  DynSystem sys_;
  std::variant<DenseTable, TrigPolynomial, OrbitTable> repr_;
};

/// Number of grid points used for the rotation-backend sup-norm estimate.
/// The grid is aligned with the rotation (its size is a multiple of q), so
/// the estimate is invariant under alpha.
int trig_sup_samples(const RationalRotation& rot);

}  // namespace ell1
