#include "ell1/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace ell1 {

namespace {

using EMat = Eigen::MatrixXcd;

EMat to_eigen(const ComplexMatrix& m) {
  EMat out(m.dim(), m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) out(r, c) = m.at(r, c);
  return out;
}

ComplexMatrix from_eigen(const EMat& e) {
  ComplexMatrix out(static_cast<int>(e.rows()));
  for (int r = 0; r < e.rows(); ++r)
    for (int c = 0; c < e.cols(); ++c) out.at(r, c) = e(r, c);
  return out;
}

// Null-space basis of the stacked map M -> (M A_i - B_i M)_i, as matrices.
std::vector<EMat> sylvester_null_space(const std::vector<ComplexMatrix>& lhs,
                                       const std::vector<ComplexMatrix>& rhs,
                                       double rel_threshold) {
  const int n = lhs.front().dim();
  const int nn = n * n;
  EMat sys(static_cast<int>(lhs.size()) * nn, nn);
  sys.setZero();
  // vec(M A - B M): row index (block, r, c), column index = entry (i, j) of M.
  for (std::size_t g = 0; g < lhs.size(); ++g) {
    const EMat A = to_eigen(lhs[g]);
    const EMat B = to_eigen(rhs[g]);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const int row = static_cast<int>(g) * nn + r * n + c;
        for (int j = 0; j < n; ++j) sys(row, r * n + j) += A(j, c);
        for (int i = 0; i < n; ++i) sys(row, i * n + c) -= B(r, i);
      }
  }
  Eigen::JacobiSVD<EMat> svd(sys, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = (sv.size() ? sv(0) : 0.0) * rel_threshold;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  std::vector<EMat> basis;
  for (int k = rank; k < nn; ++k) {
    EMat v(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v(i, j) = svd.matrixV()(i * n + j, k);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) out.at(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (n_ != o.n_) throw DomainError("matrix dimension mismatch");
  ComplexMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int k = 0; k < n_; ++k) {
      const Complex v = at(r, k);
      if (v == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < n_; ++c) out.at(r, c) += v * o.at(k, c);
    }
  return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex c) const {
  ComplexMatrix out = *this;
  for (auto& v : out.a_) v *= c;
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out.at(r, c) = std::conj(at(c, r));
  return out;
}

double ComplexMatrix::max_abs() const {
  double best = 0.0;
  for (const auto& v : a_) best = std::max(best, std::abs(v));
  return best;
}

bool ComplexMatrix::is_unitary(double tol) const {
  return (adjoint() * *this - identity(n_)).max_abs() <= tol;
}

std::vector<Complex> eigenvalues(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<EMat> solver(to_eigen(m), /*computeEigenvectors=*/false);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

int commutant_dimension_of_set(const std::vector<ComplexMatrix>& generators,
                               double rel_threshold) {
  if (generators.empty()) throw DomainError("commutant of an empty set is undefined here");
  return static_cast<int>(
      sylvester_null_space(generators, generators, rel_threshold).size());
}

IntertwinerSearch solve_intertwiner(const std::vector<ComplexMatrix>& lhs,
                                    const std::vector<ComplexMatrix>& rhs,
                                    double rel_threshold, int retries, unsigned seed) {
  IntertwinerSearch out;
  if (lhs.empty() || lhs.front().dim() != rhs.front().dim()) return out;
  const int n = lhs.front().dim();
  auto basis = sylvester_null_space(lhs, rhs, rel_threshold);
  if (basis.empty()) return out;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < retries; ++attempt) {
    EMat cand = EMat::Zero(n, n);
    if (attempt == 0 && basis.size() == 1) {
      cand = basis.front();
    } else {
      for (const auto& b : basis) cand += Complex(gauss(rng), gauss(rng)) * b;
    }
    const double scale = cand.cwiseAbs().maxCoeff();
    if (scale == 0.0) continue;
    cand /= scale;
    if (std::abs(cand.determinant()) > 1e-9) {
      out.found = true;
      out.matrix = from_eigen(cand);
      return out;
    }
  }
  return out;
}

}  // namespace ell1
