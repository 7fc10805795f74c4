#include "ell1/algebra.hpp"

#include <algorithm>
#include <set>

namespace ell1 {

AlgebraElement::AlgebraElement(DynSystem sys, std::map<long long, FunctionOnX> coeffs)
    : sys_(std::move(sys)) {
  for (auto& [n, f] : coeffs) {
    if (!(f.system() == sys_)) throw DomainError("coefficient belongs to another system");
    insert_pruned(n, std::move(f));
  }
}

void AlgebraElement::insert_pruned(long long n, FunctionOnX f) {
  if (!f.is_zero()) coeffs_.insert_or_assign(n, std::move(f));
}

AlgebraElement AlgebraElement::unit(const DynSystem& sys) { return delta_power(sys, 0); }

AlgebraElement AlgebraElement::delta_power(const DynSystem& sys, long long n) {
  AlgebraElement out(sys);
  out.insert_pruned(n, FunctionOnX::constant(sys, GaussianRational(1)));
  return out;
}

AlgebraElement AlgebraElement::embed_function(const FunctionOnX& f) {
  AlgebraElement out(f.system());
  out.insert_pruned(0, f);
  return out;
}

FunctionOnX AlgebraElement::coefficient(long long n) const {
  auto it = coeffs_.find(n);
  if (it != coeffs_.end()) return it->second;
  return FunctionOnX::constant(sys_, GaussianRational(0));
}

std::vector<long long> AlgebraElement::support() const {
  std::vector<long long> out;
  out.reserve(coeffs_.size());
  for (const auto& [n, f] : coeffs_) out.push_back(n);
  return out;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (!(sys_ == o.sys_)) throw DomainError("elements belong to different systems");
  AlgebraElement out(sys_);
  for (const auto& [n, f] : coeffs_) {
    auto it = o.coeffs_.find(n);
    out.insert_pruned(n, it == o.coeffs_.end() ? f : f + it->second);
  }
  for (const auto& [n, g] : o.coeffs_)
    if (!coeffs_.contains(n)) out.insert_pruned(n, g);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + o.scaled(GaussianRational(-1));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  if (!(sys_ == o.sys_)) throw DomainError("elements belong to different systems");
  // (ab)(n) = sum_k a(k) . alpha^k(b(n-k)), finitely many terms.
  std::map<long long, FunctionOnX> acc;
  for (const auto& [k, f] : coeffs_) {
    for (const auto& [m, g] : o.coeffs_) {
      FunctionOnX term = f * g.alpha_power(k);
      auto it = acc.find(k + m);
      if (it == acc.end())
        acc.emplace(k + m, std::move(term));
      else
        it->second = it->second + term;
    }
  }
  return AlgebraElement(sys_, std::move(acc));
}

AlgebraElement AlgebraElement::scaled(Complex c) const {
  AlgebraElement out(sys_);
  for (const auto& [n, f] : coeffs_) out.insert_pruned(n, f.scaled(c));
  return out;
}

AlgebraElement AlgebraElement::scaled(const GaussianRational& c) const {
  AlgebraElement out(sys_);
  for (const auto& [n, f] : coeffs_) out.insert_pruned(n, f.scaled(c));
  return out;
}

AlgebraElement AlgebraElement::involution() const {
  // a*(n) = conj(alpha^n(a(-n)))
  AlgebraElement out(sys_);
  for (const auto& [n, f] : coeffs_) out.insert_pruned(-n, f.alpha_power(-n).conj());
  return out;
}

double AlgebraElement::one_norm() const {
  std::vector<double> sups;
  sups.reserve(coeffs_.size());
  for (const auto& [n, f] : coeffs_) sups.push_back(f.sup_norm());
  std::sort(sups.begin(), sups.end());
  double acc = 0.0;
  for (double s : sups) acc += s;
  return acc;
}

std::optional<std::map<long long, Rational>> AlgebraElement::sup_norms_squared_exact() const {
  std::map<long long, Rational> out;
  for (const auto& [n, f] : coeffs_) {
    auto sq = f.sup_norm_squared_exact();
    if (!sq) return std::nullopt;
    out.emplace(n, *sq);
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }
AlgebraElement involution(const AlgebraElement& a) { return a.involution(); }
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) { return a + b; }
AlgebraElement scale(Complex c, const AlgebraElement& a) { return a.scaled(c); }
double one_norm(const AlgebraElement& a) { return a.one_norm(); }

bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double tol) {
  return (a - b).one_norm() <= tol;
}

FunctionOnX alpha_power(const DynSystem& sys, const FunctionOnX& f, long long n) {
  if (!(f.system() == sys)) throw DomainError("function belongs to another system");
  return f.alpha_power(n);
}

RestrictionResult restrict_to_subsystem(const AlgebraElement& a, const std::vector<int>& subset) {
  const DynSystem& sys = a.system();
  const auto& perm = sys.finite_perm().perm;
  std::set<int> s(subset.begin(), subset.end());
  if (s.empty()) throw DomainError("restriction subset must be non-empty");
  for (int i : s) {
    if (i < 0 || i >= sys.size()) throw DomainError("subset point outside the system");
    if (!s.contains(perm[static_cast<std::size_t>(i)]))
      throw DomainError("subset is not invariant under sigma");
  }
  std::vector<int> order(s.begin(), s.end());
  std::vector<int> to_sub(static_cast<std::size_t>(sys.size()), -1);
  for (std::size_t j = 0; j < order.size(); ++j) to_sub[static_cast<std::size_t>(order[j])] = static_cast<int>(j);

  FinitePermutation sub;
  sub.perm.resize(order.size());
  for (std::size_t j = 0; j < order.size(); ++j)
    sub.perm[j] = to_sub[static_cast<std::size_t>(perm[static_cast<std::size_t>(order[j])])];
  DynSystem subsys{sub};

  AlgebraElement out(subsys);
  std::map<long long, FunctionOnX> coeffs;
  for (const auto& [n, f] : a.coefficients()) {
    DenseTable t;
    t.values.reserve(order.size());
    for (int idx : order) t.values.push_back(*f.evaluate_exact(PermPoint{idx}));
    coeffs.emplace(n, FunctionOnX(subsys, std::move(t)));
  }
  return {subsys, AlgebraElement(subsys, std::move(coeffs)), order};
}

FunctionOnX bump_function(const DynSystem& sys, const Point& x, long long n) {
  sys.check_point(x);
  if (n < 0) throw DomainError("bump radius must be >= 0");
  auto p = period(sys, x);
  if (p && n >= *p) throw DomainError("orbit points collide: radius >= period");
  if (n == 0) return FunctionOnX::constant(sys, GaussianRational(1));
  if (sys.backend() == Backend::RationalRot)
    throw DomainError("no norm-one point bump in the trig-polynomial class");
  return FunctionOnX::indicator(sys, x);
}

}  // namespace ell1
