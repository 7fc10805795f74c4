#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ell1/algebra.hpp"
#include "ell1/matrix.hpp"

namespace ell1 {

/// A p-dimensional representation datum: periodic base point x of period p
/// and a unimodular lambda.  delta acts as the cyclic matrix with lambda in
/// the top-right corner, C(X) acts diagonally through the orbit of x.
struct PeriodicRep {
  DynSystem sys;
  Point x;
  Complex lambda;
  int dimension = 1;
};

/// Validates |lambda| = 1 (within 1e-12) and that x is periodic.
PeriodicRep make_periodic_rep(const DynSystem& sys, const Point& x, Complex lambda);

/// The p x p matrix T with T e_j = e_{j+1} for j < p-1 and T e_{p-1} =
/// lambda e_0 (subdiagonal of ones, lambda in the top-right corner).
/// T is unitary and T^p = lambda I.
ComplexMatrix delta_matrix(int p, Complex lambda);

/// diag(f(x), f(sigma x), ..., f(sigma^{p-1} x)).
ComplexMatrix rep_function_matrix(const PeriodicRep& rep, const FunctionOnX& f);

/// sum_n diag(f_n along the orbit) . T^n: a unital *-homomorphism.
ComplexMatrix periodic_rep_matrix(const PeriodicRep& rep, const AlgebraElement& a);

/// Matrices of delta and of a point-separating family of functions; the
/// commutant of this set equals the commutant of the whole image.
std::vector<ComplexMatrix> rep_generators(const PeriodicRep& rep);

/// 1 exactly when the representation is irreducible.
int commutant_dimension(const PeriodicRep& rep);

/// An invertible U with U pi1(a) = pi2(a) U for the generators, when one
/// exists (same orbit and equal lambda); normalized to be unitary.  For
/// rep2 based at sigma(rep1.x) with the same lambda, the explicit
/// one-step unitary (U e_0 = e'_{p-1}, U e_j = lambda e'_{j-1}) is
/// returned.
std::optional<ComplexMatrix> find_intertwiner(const PeriodicRep& rep1, const PeriodicRep& rep2);

/// Finitely supported two-sided sequence with exact entries and a norm
/// order marker p in [1, inf].
class SeqVector {
public:
  SeqVector() = default;
  explicit SeqVector(double norm_order);

  static SeqVector basis(long long k, double norm_order = 1.0);

  double norm_order() const { return p_; }
  const std::map<long long, GaussianRational>& entries() const { return entries_; }
  GaussianRational entry(long long k) const;
  void set(long long k, const GaussianRational& v);
  void set(long long k, Complex v) { set(k, GaussianRational::from_complex(v)); }

  bool is_zero() const { return entries_.empty(); }
  /// Largest |k| in the support (0 for the zero vector).
  long long support_radius() const;

  SeqVector operator+(const SeqVector& o) const;
  SeqVector operator-(const SeqVector& o) const;
  SeqVector scaled(const GaussianRational& c) const;
  /// S^n: entry k moves to k + n.
  SeqVector shifted(long long n) const;

  /// ell^p norm per the order marker (max for p = inf); exactly 0.0 for
  /// the zero vector.
  double norm() const;
  double norm_as(double p) const;

  bool operator==(const SeqVector& o) const { return p_ == o.p_ && entries_ == o.entries_; }

private:
  void prune(long long k);
  double p_ = 1.0;
  std::map<long long, GaussianRational> entries_;
};

/// pi^p_x(a) v, computed exactly: output_m = sum_n f_n(sigma^m x) v_{m-n}.
/// Errors when x is periodic.
SeqVector aperiodic_apply(const DynSystem& sys, const Point& x, const AlgebraElement& a,
                          const SeqVector& v);

/// One round of the constructive density argument for rho(0) = 1:
/// a = (sum_{|n| <= N2} tau_n delta^n) . bump(x, N1) with N1, N2 covering
/// the supports, so pi(a) rho = tau exactly and ||a|| <= ||tau||.
AlgebraElement density_solve_onestep(const DynSystem& sys, const Point& x, const SeqVector& rho,
                                     const SeqVector& tau);

struct DensitySolveResult {
  AlgebraElement a;
  std::vector<double> residual_norms;  // ell^1 norm after each step
  int steps = 0;
  long long n0 = 0;            // preprocessing shift (argmax entry of rho)
  double epsilon_achieved = 0; // ||a|| max|rho_n| / ||tau|| - 1, clamped at 0
};

/// Solves pi(a) rho = tau for arbitrary nonzero finitely supported rho:
/// locate n0 with |rho_{n0}| maximal (ties: smallest |n0|, negative
/// first), premultiply by rho_{n0}^{-1} delta^{-n0}, then iterate the
/// one-step construction.  Uncapped, finitely supported data terminates
/// with residual exactly 0 after one step and
/// ||a|| <= (1+eps) ||tau|| / max|rho_n| with eps ~ 0.  The caps force
/// truncated steps so the geometric decay of the inductive construction
/// becomes observable; cap < 0 means unlimited.
DensitySolveResult density_solve(const DynSystem& sys, const Point& x, const SeqVector& rho,
                                 const SeqVector& tau, double gamma, int max_steps,
                                 long long cap_n1 = -1, long long cap_n2 = -1);

struct ExtractResult {
  SeqVector vector;
  double error_bound = 0;  // (sum_{|n|>N} |rho'_n|^p)^{1/p}
  double p = 1;
};

/// pi^p_x(bump(x, N)) applied to rho after the shift/scale normalization
/// rho'(0) = 1; the reported bound dominates ||result - e_0||_p and equals
/// the exact tail norm of rho'.
ExtractResult extract_basis_vector(const DynSystem& sys, const Point& x, const SeqVector& rho,
                                   long long N);

}  // namespace ell1
