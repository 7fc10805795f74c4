#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ell1/function.hpp"

namespace ell1 {

/// Finitely supported series sum_n f_n delta^n over one system, with the
/// norm sum_n sup|f_n|.  Multiplication is the twisted convolution
///   (ab)(n) = sum_k a(k) . alpha^k(b(n-k)),
/// the involution is a*(n) = conj(alpha^n(a(-n))), and delta f delta^{-1}
/// = alpha(f) = f o sigma^{-1}.  Zero coefficients are pruned eagerly, so
/// support() is exact.  Values are immutable; operations return copies.
class AlgebraElement {
public:
  AlgebraElement() = default;  // zero element over the empty system
  explicit AlgebraElement(DynSystem sys) : sys_(std::move(sys)) {}
  AlgebraElement(DynSystem sys, std::map<long long, FunctionOnX> coeffs);

  static AlgebraElement zero(const DynSystem& sys) { return AlgebraElement(sys); }
  static AlgebraElement unit(const DynSystem& sys);
  /// delta^n = chi_{n}.
  static AlgebraElement delta_power(const DynSystem& sys, long long n);
  /// f viewed as f . delta^0.
  static AlgebraElement embed_function(const FunctionOnX& f);

  const DynSystem& system() const { return sys_; }
  const std::map<long long, FunctionOnX>& coefficients() const { return coeffs_; }
  /// The coefficient f_n (zero function when absent).
  FunctionOnX coefficient(long long n) const;
  std::vector<long long> support() const;
  bool is_zero() const { return coeffs_.empty(); }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement scaled(Complex c) const;
  AlgebraElement scaled(const GaussianRational& c) const;
  AlgebraElement involution() const;

  /// sum_n sup|f_n|.  The per-coefficient sups are summed in sorted order,
  /// so elements with equal sup multisets get bit-identical norms.
  double one_norm() const;
  /// Per-coefficient squared sups, exact; nullopt if any coefficient is
  /// represented inexactly (trig backend).
  std::optional<std::map<long long, Rational>> sup_norms_squared_exact() const;

  bool equals_exact(const AlgebraElement& o) const { return (*this - o).is_zero(); }

private:
  void insert_pruned(long long n, FunctionOnX f);

  DynSystem sys_;
  std::map<long long, FunctionOnX> coeffs_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement involution(const AlgebraElement& a);
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(Complex c, const AlgebraElement& a);
double one_norm(const AlgebraElement& a);
bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double tol);

/// alpha^n(f) = f o sigma^{-n}.
FunctionOnX alpha_power(const DynSystem& sys, const FunctionOnX& f, long long n);

/// Coefficientwise restriction sum f_n|_S delta_S^n to the subsystem on an
/// invariant subset S (finite permutation backend).  The restriction map is
/// unital and never increases the norm.
struct RestrictionResult {
  DynSystem subsystem;
  AlgebraElement element;
  std::vector<int> point_map;  // subsystem index -> original index, sorted
};
RestrictionResult restrict_to_subsystem(const AlgebraElement& a, const std::vector<int>& subset);

/// Norm-one function equal to 1 at x and 0 at sigma^j x for 0 < |j| <= n.
/// For n = 0 there is no vanishing constraint and the constant 1 is
/// returned; for n >= 1 the indicator of {x}.  Errors when n >= period(x).
FunctionOnX bump_function(const DynSystem& sys, const Point& x, long long n);

}  // namespace ell1
