#pragma once

// Semisimple torus elements with values q^r e^{2 pi i theta} on simple roots,
// for a formal transcendental q > 1. Two values agree iff both r and theta
// (mod 1) agree, so every comparison below is exact.

#include <cassert>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "lietk/rational.hpp"
#include "lietk/rootsys.hpp"

namespace lietk {

/// q^r * exp(2 pi i theta) with theta reduced into [0, 1).
class RootValue {
 public:
  RootValue() = default;
  RootValue(Rational r, Rational theta) : r_(r), theta_(frac(theta)) {}

  static RootValue one() { return {}; }
  static RootValue q() { return {Rational(1), Rational(0)}; }

  const Rational& r() const { return r_; }
  const Rational& theta() const { return theta_; }

  bool is_one() const { return r_ == 0 && theta_ == 0; }

  friend RootValue operator+(const RootValue& a, const RootValue& b) {
    return {a.r_ + b.r_, a.theta_ + b.theta_};
  }
  friend RootValue operator-(const RootValue& a) { return {-a.r_, -a.theta_}; }
  friend RootValue operator-(const RootValue& a, const RootValue& b) { return a + (-b); }
  friend RootValue operator*(const Rational& k, const RootValue& a) { return {k * a.r_, k * a.theta_}; }
  friend bool operator==(const RootValue&, const RootValue&) = default;

 private:
  Rational r_{0};
  Rational theta_{0};
};

/// An element of the adjoint torus, given by its values on the simple roots.
class TorusElement {
 public:
  TorusElement() = default;
  TorusElement(RootSystemPtr sys, std::vector<RootValue> vals) : sys_(std::move(sys)), vals_(std::move(vals)) {
    if (static_cast<int>(vals_.size()) != sys_->rank())
      throw InvalidSetting("torus element needs " + std::to_string(sys_->rank()) + " values, got " +
                           std::to_string(vals_.size()));
  }

  static TorusElement identity(const RootSystemPtr& sys) {
    return {sys, std::vector<RootValue>(static_cast<std::size_t>(sys->rank()))};
  }
  static TorusElement hyperbolic(const RootSystemPtr& sys, const RationalVector& r) {
    std::vector<RootValue> v;
    for (const auto& x : r) v.emplace_back(x, Rational(0));
    return {sys, std::move(v)};
  }
  static TorusElement from_parts(const RootSystemPtr& sys, const RationalVector& r, const RationalVector& theta) {
    if (r.size() != theta.size()) throw InvalidSetting("r and theta lengths differ");
    std::vector<RootValue> v;
    for (std::size_t i = 0; i < r.size(); ++i) v.emplace_back(r[i], theta[i]);
    return {sys, std::move(v)};
  }

  const RootSystemPtr& system() const { return sys_; }
  const std::vector<RootValue>& values() const { return vals_; }
  int rank() const { return static_cast<int>(vals_.size()); }

  /// Value on an arbitrary root-lattice vector by linear extension.
  RootValue value_on(const IntVector& beta) const {
    RootValue out;
    for (std::size_t i = 0; i < vals_.size(); ++i)
      if (beta[i] != 0) out = out + Rational(beta[i]) * vals_[i];
    return out;
  }
  RootValue value_on_root(std::size_t root_index) const { return value_on(sys_->root(root_index)); }

  RationalVector r_vector() const {
    RationalVector out;
    for (const auto& v : vals_) out.push_back(v.r());
    return out;
  }
  RationalVector theta_vector() const {
    RationalVector out;
    for (const auto& v : vals_) out.push_back(v.theta());
    return out;
  }
  bool is_hyperbolic() const {
    return std::all_of(vals_.begin(), vals_.end(), [](const RootValue& v) { return v.theta() == 0; });
  }

  friend TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    std::vector<RootValue> v;
    for (std::size_t i = 0; i < a.vals_.size(); ++i) v.push_back(a.vals_[i] + b.vals_[i]);
    return {a.sys_, std::move(v)};
  }
  TorusElement inverse() const {
    std::vector<RootValue> v;
    for (const auto& x : vals_) v.push_back(-x);
    return {sys_, std::move(v)};
  }
  friend bool operator==(const TorusElement& a, const TorusElement& b) { return a.vals_ == b.vals_; }

 private:
  RootSystemPtr sys_;
  std::vector<RootValue> vals_;
};

inline RootValue value_on_root(const TorusElement& s, const IntVector& beta) { return s.value_on(beta); }

/// Returns (s_v, s_c): the hyperbolic and compact factors.
inline std::pair<TorusElement, TorusElement> polar_parts(const TorusElement& s) {
  std::vector<RootValue> v, c;
  for (const auto& x : s.values()) {
    v.emplace_back(x.r(), Rational(0));
    c.emplace_back(Rational(0), x.theta());
  }
  return {TorusElement(s.system(), std::move(v)), TorusElement(s.system(), std::move(c))};
}

/// The element w.s for the simple reflection w = s_i: (w.s)(beta) = s(s_i beta).
inline TorusElement weyl_act(const TorusElement& s, int i) {
  const auto& a = s.system()->cartan();
  std::vector<RootValue> v;
  for (int j = 0; j < s.rank(); ++j) v.push_back(s.values()[j] - Rational(a[i][j]) * s.values()[i]);
  return {s.system(), std::move(v)};
}

/// dim of the lambda-eigenspace of Ad(s) on the derived algebra of the group
/// with root system `within`: member roots with value lambda, plus the Cartan
/// rank when lambda = 1.
inline int eigenspace_dim(const TorusElement& s, const RootValue& lambda, const Subsystem& within) {
  int count = 0;
  for (auto i : within.members())
    if (s.value_on_root(i) == lambda) ++count;
  if (lambda.is_one()) count += within.rank();
  return count;
}

inline int eigenspace_dim(const TorusElement& s, const RootValue& lambda) {
  int count = 0;
  for (std::size_t i = 0; i < s.system()->size(); ++i)
    if (s.value_on_root(i) == lambda) ++count;
  if (lambda.is_one()) count += s.system()->rank();
  return count;
}

struct QDistinguishedVerdict {
  bool flag = false;
  int margin = 0;  ///< dim g_s(q) - dim g_s(1)
  int dim_q = 0;
  int dim_1 = 0;
};

namespace detail {
inline QDistinguishedVerdict make_verdict(int dq, int d1) {
  QDistinguishedVerdict v{dq >= d1, dq - d1, dq, d1};
  // Equality is forced whenever the inequality holds.
  assert(!v.flag || v.margin == 0);
  return v;
}
}  // namespace detail

inline QDistinguishedVerdict is_q_distinguished(const TorusElement& s) {
  return detail::make_verdict(eigenspace_dim(s, RootValue::q()), eigenspace_dim(s, RootValue::one()));
}

/// q-distinguished test inside the reductive subgroup with root system `within`.
inline QDistinguishedVerdict is_q_distinguished(const TorusElement& s, const Subsystem& within) {
  return detail::make_verdict(eigenspace_dim(s, RootValue::q(), within),
                              eigenspace_dim(s, RootValue::one(), within));
}

/// Roots (of `within`) on which s takes the value 1.
inline Subsystem centralizer_subsystem(const TorusElement& s, const Subsystem& within) {
  std::vector<std::size_t> members;
  for (auto i : within.members())
    if (s.value_on_root(i).is_one()) members.push_back(i);
  return closed_subsystem(s.system(), members);
}

inline Subsystem centralizer_subsystem(const TorusElement& s) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < s.system()->size(); ++i)
    if (s.value_on_root(i).is_one()) members.push_back(i);
  return closed_subsystem(s.system(), members);
}

/// Multiplicative order of an element with rational angles and trivial
/// hyperbolic part; 0 when the hyperbolic part is nontrivial.
inline std::int64_t element_order(const TorusElement& s) {
  std::int64_t order = 1;
  for (const auto& v : s.values()) {
    if (v.r() != 0) return 0;
    order = std::lcm(order, v.theta().denominator());
  }
  return order;
}

}  // namespace lietk
