#include "ell1/reps.hpp"

#include <algorithm>
#include <cmath>

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

}  // namespace

PeriodicRep make_periodic_rep(const DynSystem& sys, const Point& x, Complex lambda) {
  sys.check_point(x);
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
    throw DomainError("lambda must be unimodular (|lambda| = 1 within 1e-12)");
  auto p = period(sys, x);
  if (!p) throw DomainError("periodic representations require a periodic base point");
  return PeriodicRep{sys, x, lambda, static_cast<int>(*p)};
}

ComplexMatrix delta_matrix(int p, Complex lambda) {
  if (p < 1) throw DomainError("dimension must be >= 1");
  ComplexMatrix t(p);
  if (p == 1) {
    t.at(0, 0) = lambda;
    return t;
  }
  for (int j = 0; j + 1 < p; ++j) t.at(j + 1, j) = 1.0;
  t.at(0, p - 1) = lambda;
  return t;
}

ComplexMatrix rep_function_matrix(const PeriodicRep& rep, const FunctionOnX& f) {
  if (!(f.system() == rep.sys)) throw DomainError("function belongs to another system");
  ComplexMatrix m(rep.dimension);
  for (int j = 0; j < rep.dimension; ++j)
    m.at(j, j) = f.evaluate(apply_sigma(rep.sys, rep.x, j));
  return m;
}

ComplexMatrix periodic_rep_matrix(const PeriodicRep& rep, const AlgebraElement& a) {
  if (!(a.system() == rep.sys)) throw DomainError("element belongs to another system");
  const int p = rep.dimension;
  ComplexMatrix m(p);
  for (const auto& [n, f] : a.coefficients()) {
    // (T^n)_{r,c} = lambda^{floor((c+n)/p)} [r = (c+n) mod p]
    for (int c = 0; c < p; ++c) {
      const long long cn = c + n;
      const int r = static_cast<int>(((cn % p) + p) % p);
      const Complex lpow = int_power(rep.lambda, floor_div(cn, p));
      m.at(r, c) += f.evaluate(apply_sigma(rep.sys, rep.x, r)) * lpow;
    }
  }
  return m;
}

std::vector<ComplexMatrix> rep_generators(const PeriodicRep& rep) {
  std::vector<ComplexMatrix> gens;
  gens.push_back(delta_matrix(rep.dimension, rep.lambda));
  if (rep.sys.backend() == Backend::FinitePerm) {
    const Orbit o = orbit(rep.sys, rep.x);
    for (const Point& y : o.points)
      gens.push_back(rep_function_matrix(rep, FunctionOnX::indicator(rep.sys, y)));
  } else {
    // the monomial e^{2 pi i theta} separates the orbit points
    TrigPolynomial z;
    z.coeffs[1] = Complex(1.0, 0.0);
    gens.push_back(rep_function_matrix(rep, FunctionOnX(rep.sys, std::move(z))));
  }
  return gens;
}

int commutant_dimension(const PeriodicRep& rep) {
  return commutant_dimension_of_set(rep_generators(rep));
}

std::optional<ComplexMatrix> find_intertwiner(const PeriodicRep& rep1, const PeriodicRep& rep2) {
  if (!(rep1.sys == rep2.sys)) throw DomainError("representations live over different systems");
  if (rep1.dimension != rep2.dimension) return std::nullopt;
  const int p = rep1.dimension;

  std::vector<ComplexMatrix> lhs, rhs;
  lhs.push_back(delta_matrix(p, rep1.lambda));
  rhs.push_back(delta_matrix(p, rep2.lambda));
  if (rep1.sys.backend() == Backend::FinitePerm) {
    Orbit o1 = orbit(rep1.sys, rep1.x);
    Orbit o2 = orbit(rep2.sys, rep2.x);
    std::vector<Point> pts = o1.points;
    for (const Point& y : o2.points)
      if (!o1.contains(y)) pts.push_back(y);
    for (const Point& y : pts) {
      FunctionOnX chi = FunctionOnX::indicator(rep1.sys, y);
      lhs.push_back(rep_function_matrix(rep1, chi));
      rhs.push_back(rep_function_matrix(rep2, chi));
    }
  } else {
    TrigPolynomial z;
    z.coeffs[1] = Complex(1.0, 0.0);
    FunctionOnX f(rep1.sys, std::move(z));
    lhs.push_back(rep_function_matrix(rep1, f));
    rhs.push_back(rep_function_matrix(rep2, f));
  }

  IntertwinerSearch search = solve_intertwiner(lhs, rhs);
  if (!search.found) return std::nullopt;

  // Explicit one-step unitary when rep2 sits at sigma(rep1.x).
  if (std::abs(rep1.lambda - rep2.lambda) <= 1e-12 &&
      apply_sigma(rep1.sys, rep1.x, 1) == rep2.x && p >= 2) {
    ComplexMatrix u(p);
    u.at(p - 1, 0) = 1.0;
    for (int j = 1; j < p; ++j) u.at(j - 1, j) = rep1.lambda;
    return u;
  }

  // Schur: the solution is a scalar multiple of a unitary; rescale it.
  ComplexMatrix u = search.matrix;
  const ComplexMatrix gram = u.adjoint() * u;
  double diag = 0.0;
  for (int i = 0; i < p; ++i) diag += gram.at(i, i).real();
  const double s = std::sqrt(diag / p);
  if (!(s > 0)) return std::nullopt;
  u = u.scaled(Complex(1.0 / s, 0.0));

  // Guard against spurious numerical null vectors.
  for (std::size_t g = 0; g < lhs.size(); ++g)
    if ((u * lhs[g] - rhs[g] * u).max_abs() > 1e-8) return std::nullopt;
  return u;
}

SeqVector::SeqVector(double norm_order) : p_(norm_order) {
  if (!(p_ >= 1.0)) throw DomainError("sequence norm order must satisfy p >= 1");
}

SeqVector SeqVector::basis(long long k, double norm_order) {
  SeqVector v(norm_order);
  v.set(k, GaussianRational(1));
  return v;
}

GaussianRational SeqVector::entry(long long k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? GaussianRational(0) : it->second;
}

void SeqVector::set(long long k, const GaussianRational& v) {
  if (v.is_zero())
    entries_.erase(k);
  else
    entries_[k] = v;
}

void SeqVector::prune(long long k) {
  auto it = entries_.find(k);
  if (it != entries_.end() && it->second.is_zero()) entries_.erase(it);
}

long long SeqVector::support_radius() const {
  long long r = 0;
  for (const auto& [k, v] : entries_) r = std::max(r, std::llabs(k));
  return r;
}

SeqVector SeqVector::operator+(const SeqVector& o) const {
  SeqVector out = *this;
  for (const auto& [k, v] : o.entries_) {
    out.entries_[k] = out.entry(k) + v;
    out.prune(k);
  }
  return out;
}

SeqVector SeqVector::operator-(const SeqVector& o) const {
  return *this + o.scaled(GaussianRational(-1));
}

SeqVector SeqVector::scaled(const GaussianRational& c) const {
  SeqVector out(p_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : entries_) out.entries_[k] = v * c;
  return out;
}

SeqVector SeqVector::shifted(long long n) const {
  SeqVector out(p_);
  for (const auto& [k, v] : entries_) out.entries_[k + n] = v;
  return out;
}

double SeqVector::norm() const { return norm_as(p_); }

double SeqVector::norm_as(double p) const {
  if (entries_.empty()) return 0.0;
  std::vector<double> mags;
  mags.reserve(entries_.size());
  for (const auto& [k, v] : entries_) mags.push_back(sqrt_to_double(v.norm2()));
  if (std::isinf(p)) return *std::max_element(mags.begin(), mags.end());
  std::vector<double> terms;
  terms.reserve(mags.size());
  for (double m : mags) terms.push_back(p == 1.0 ? m : std::pow(m, p));
  std::sort(terms.begin(), terms.end());
  double acc = 0.0;
  for (double t : terms) acc += t;
  return p == 1.0 ? acc : std::pow(acc, 1.0 / p);
}

SeqVector aperiodic_apply(const DynSystem& sys, const Point& x, const AlgebraElement& a,
                          const SeqVector& v) {
  sys.check_point(x);
  if (!(a.system() == sys)) throw DomainError("element belongs to another system");
  if (period(sys, x)) throw DomainError("aperiodic_apply requires an aperiodic point");
  SeqVector out(v.norm_order());
  for (const auto& [n, f] : a.coefficients()) {
    for (const auto& [k, val] : v.entries()) {
      const long long m = k + n;
      auto fv = f.evaluate_exact(apply_sigma(sys, x, m));
      if (!fv) throw DomainError("aperiodic_apply needs exactly evaluable coefficients");
      if (fv->is_zero()) continue;
      out.set(m, out.entry(m) + *fv * val);
    }
  }
  return out;
}

namespace {

// argmax |rho_n|, ties by smallest |n| with negative n first
long long argmax_entry(const SeqVector& rho) {
  bool have = false;
  long long best = 0;
  Rational best_sq(0);
  for (const auto& [n, v] : rho.entries()) {
    const Rational sq = v.norm2();
    if (!have || sq > best_sq) {
      have = true;
      best = n;
      best_sq = sq;
      continue;
    }
    if (sq == best_sq) {
      const long long an = std::llabs(n), ab = std::llabs(best);
      if (an < ab || (an == ab && n < best)) best = n;
    }
  }
  if (!have) throw DomainError("rho must be nonzero");
  return best;
}

AlgebraElement onestep_core(const DynSystem& sys, const Point& x, const SeqVector& rho,
                            const SeqVector& tau, long long n1, long long n2) {
  // a = (sum_{|n| <= n2} tau_n delta^n) . bump(x, n1)
  AlgebraElement poly = AlgebraElement::zero(sys);
  for (const auto& [n, v] : tau.entries()) {
    if (std::llabs(n) > n2) continue;
    poly = poly + AlgebraElement::delta_power(sys, n).scaled(v);
  }
  if (poly.is_zero()) return poly;
  return poly * AlgebraElement::embed_function(bump_function(sys, x, n1));
}

}  // namespace

AlgebraElement density_solve_onestep(const DynSystem& sys, const Point& x, const SeqVector& rho,
                                     const SeqVector& tau) {
  if (period(sys, x)) throw DomainError("density solve requires an aperiodic point");
  if (!(rho.entry(0) == GaussianRational(1)))
    throw DomainError("one-step solve requires rho(0) = 1");
  if (tau.is_zero()) return AlgebraElement::zero(sys);
  return onestep_core(sys, x, rho, tau, rho.support_radius(), tau.support_radius());
}

DensitySolveResult density_solve(const DynSystem& sys, const Point& x, const SeqVector& rho,
                                 const SeqVector& tau, double gamma, int max_steps,
                                 long long cap_n1, long long cap_n2) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("gamma must lie in (0, 1)");
  if (max_steps < 1) throw DomainError("max_steps must be >= 1");
  if (rho.is_zero()) throw DomainError("rho must be nonzero");
  if (period(sys, x)) throw DomainError("density solve requires an aperiodic point");

  DensitySolveResult out{AlgebraElement::zero(sys), {}, 0, 0, 0.0};
  out.n0 = argmax_entry(rho);
  const GaussianRational lead = rho.entry(out.n0);
  if (tau.is_zero()) return out;

  const SeqVector rho_n = rho.shifted(-out.n0).scaled(lead.inverse());
  const long long rho_radius = rho_n.support_radius();

  AlgebraElement acc = AlgebraElement::zero(sys);
  SeqVector residual = tau;
  for (int step = 0; step < max_steps && !residual.is_zero(); ++step) {
    const long long n1 = cap_n1 >= 0 ? std::min(cap_n1, rho_radius) : rho_radius;
    const long long n2 =
        cap_n2 >= 0 ? std::min(cap_n2, residual.support_radius()) : residual.support_radius();
    AlgebraElement a_step = onestep_core(sys, x, rho_n, residual, n1, n2);
    acc = acc + a_step;
    residual = residual - aperiodic_apply(sys, x, a_step, rho_n);
    out.residual_norms.push_back(residual.norm_as(1.0));
    out.steps = step + 1;
    if (a_step.is_zero() && !residual.is_zero()) break;  // caps exclude whole residual
  }

  out.a = acc * AlgebraElement::delta_power(sys, -out.n0).scaled(lead.inverse());
  const double tau_norm = tau.norm_as(1.0);
  if (tau_norm > 0.0) {
    const double lead_abs = sqrt_to_double(lead.norm2());
    out.epsilon_achieved = std::max(0.0, out.a.one_norm() * lead_abs / tau_norm - 1.0);
  }
  return out;
}

ExtractResult extract_basis_vector(const DynSystem& sys, const Point& x, const SeqVector& rho,
                                   long long N) {
  if (rho.is_zero()) throw DomainError("rho must be nonzero");
  if (period(sys, x)) throw DomainError("basis extraction requires an aperiodic point");
  if (N < 0) throw DomainError("window radius must be >= 0");

  const long long n0 = argmax_entry(rho);
  const SeqVector rho_n = rho.shifted(-n0).scaled(rho.entry(n0).inverse());

  ExtractResult out;
  out.p = rho.norm_order();
  out.vector = aperiodic_apply(
      sys, x, AlgebraElement::embed_function(bump_function(sys, x, N)), rho_n);

  SeqVector tail(rho.norm_order());
  for (const auto& [k, v] : rho_n.entries())
    if (std::llabs(k) > N) tail.set(k, v);
  out.error_bound = tail.norm();
  return out;
}

}  // namespace ell1
