#pragma once

#include <vector>

#include "ell1/scalars.hpp"

namespace ell1 {

/// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Complex(0, 0)) {}

  static ComplexMatrix identity(int n);

  int dim() const { return n_; }
  Complex& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  Complex at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const std::vector<Complex>& data() const { return a_; }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix scaled(Complex c) const;
  ComplexMatrix adjoint() const;

  double max_abs() const;
  bool is_unitary(double tol) const;

private:
  int n_ = 0;
  std::vector<Complex> a_;
};

/// Eigenvalues (unsorted) of a general complex matrix.
std::vector<Complex> eigenvalues(const ComplexMatrix& m);

/// Dimension of the joint commutant {M : MG = GM for all G}, decided by a
/// singular-value rank cut (relative threshold) on the stacked Sylvester
/// system.
int commutant_dimension_of_set(const std::vector<ComplexMatrix>& generators,
                               double rel_threshold = 1e-9);

/// A joint solution of M.A_i = B_i.M that is invertible, when one exists.
/// Candidates are drawn from the null space; invertibility is decided by
/// the determinant of random combinations (retries), per Schur's lemma the
/// space is 0- or 1-dimensional in the intended use.
struct IntertwinerSearch {
  bool found = false;
  ComplexMatrix matrix;
};
IntertwinerSearch solve_intertwiner(const std::vector<ComplexMatrix>& lhs,
                                    const std::vector<ComplexMatrix>& rhs,
                                    double rel_threshold = 1e-9, int retries = 3,
                                    unsigned seed = 12345);

}  // namespace ell1
