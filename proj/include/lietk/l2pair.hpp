#pragma once

// L^2-pairs (s, N) at root-system level. N is represented by the orbit
// descriptor of its dense orbit: a distinguished parabolic datum on the
// centralizer subsystem of the compact part of s.

#include <string>
#include <vector>

#include "lietk/orbits.hpp"
#include "lietk/rootsys.hpp"
#include "lietk/torus.hpp"

namespace lietk {

enum class L2Step { BadBaseValue, RankDeficit, NotDistinguished };

inline const char* to_string(L2Step step) {
  switch (step) {
    case L2Step::BadBaseValue: return "bad base value";
    case L2Step::RankDeficit: return "rank deficit";
    case L2Step::NotDistinguished: return "non-distinguished datum";
  }
  return "?";
}

class NotQDistinguished : public Error {
 public:
  NotQDistinguished(L2Step step, const QDistinguishedVerdict& v, const std::string& detail)
      : Error("NotQDistinguished", message(v)), step_(step), verdict_(v), detail_(detail) {}
  L2Step step() const { return step_; }
  const QDistinguishedVerdict& verdict() const { return verdict_; }
  /// Which construction step failed, e.g. "rank deficit: support rank 1 < 2".
  std::string detail() const { return std::string(to_string(step_)) + ": " + detail_; }

 private:
  static std::string message(const QDistinguishedVerdict& v) {
    std::string cmp = v.dim_q < v.dim_1 ? " < " : (v.dim_q == v.dim_1 ? " = " : " > ");
    return "dim g(q)=" + std::to_string(v.dim_q) + cmp + "dim g(1)=" + std::to_string(v.dim_1);
  }
  L2Step step_;
  QDistinguishedVerdict verdict_;
  std::string detail_;
};

struct L2Pair {
  TorusElement s;
  Subsystem ambient;  ///< the group the pair lives in (whole system by default)
  Subsystem support;  ///< centralizer of the compact part, based so that s is positive
  ParabolicDatum datum;
};

/// Positivity "s_v first, parent order second": beta > 0 iff r(beta) > 0, or
/// r(beta) = 0 and beta is positive in the parent.
inline Positivity hyperbolic_positivity(const TorusElement& s) {
  return [s](std::size_t i) {
    const Rational r = s.value_on_root(i).r();
    return r > 0 || (r == 0 && s.system()->is_positive(i));
  };
}

inline L2Pair construct_l2_pair(const TorusElement& s, const Subsystem& within) {
  const auto verdict = is_q_distinguished(s, within);
  const auto [s_v, s_c] = polar_parts(s);
  const Subsystem support = rebase(centralizer_subsystem(s_c, within), hyperbolic_positivity(s));

  ParabolicDatum datum{support, {}};
  for (int k = 0; k < support.rank(); ++k) {
    const RootValue v = s.value_on_root(support.base()[static_cast<std::size_t>(k)]);
    if (v.theta() != 0 || (v.r() != 0 && v.r() != 1))
      throw NotQDistinguished(L2Step::BadBaseValue, verdict,
                              "support base root " + std::to_string(k) + " has r=" + lietk::to_string(v.r()));
    if (v.r() == 1) datum.weight2.push_back(k);
  }
  if (support.rank() != within.rank())
    throw NotQDistinguished(L2Step::RankDeficit, verdict,
                            "support rank " + std::to_string(support.rank()) + " < " + std::to_string(within.rank()));
  if (!is_distinguished(datum)) {
    const auto g = graded_dims(datum);
    throw NotQDistinguished(L2Step::NotDistinguished, verdict,
                            "dim0=" + std::to_string(g.dim0) + ", dim2=" + std::to_string(g.dim2));
  }
  return {s, within, support, std::move(datum)};
}

inline L2Pair construct_l2_pair(const TorusElement& s) { return construct_l2_pair(s, whole_system(s.system())); }

struct L2Report {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

/// Checks the pair's invariants and that s is q-distinguished. Never throws
/// on structurally valid input.
inline L2Report verify_l2_pair(const L2Pair& p) {
  L2Report rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.diagnostics.push_back(std::move(msg));
  };
  if (p.datum.sub.members() != p.support.members() || p.datum.sub.base() != p.support.base())
    fail("datum is not defined on the support");
  for (auto m : p.support.members())
    if (!p.ambient.contains(m)) {
      fail("support is not contained in the ambient subsystem");
      break;
    }
  const auto& base = p.support.base();
  for (std::size_t k = 0; k < base.size(); ++k) {
    const bool heavy = std::find(p.datum.weight2.begin(), p.datum.weight2.end(), static_cast<int>(k)) !=
                       p.datum.weight2.end();
    const RootValue v = p.s.value_on_root(base[k]);
    const RootValue expected = heavy ? RootValue::q() : RootValue::one();
    if (!(v == expected))
      fail("weight mismatch on support base root " + std::to_string(k) + ": weight " + (heavy ? "2" : "0") +
           " but value q^" + to_string(v.r()) + " e^(2 pi i " + to_string(v.theta()) + ")");
  }
  if (p.support.rank() != p.ambient.rank())
    fail("rank deficit: support rank " + std::to_string(p.support.rank()) + " < " +
         std::to_string(p.ambient.rank()));
  if (!is_distinguished(p.datum)) fail("datum is not distinguished in the support");
  const auto v = is_q_distinguished(p.s, p.ambient);
  if (!v.flag)
    fail("s is not q-distinguished: dim g(q)=" + std::to_string(v.dim_q) + ", dim g(1)=" + std::to_string(v.dim_1));
  return rep;
}

struct Sl2Parameter {
  WeightedCoweight coweight;
  bool admissible = false;
  bool discrete = false;
};

inline Sl2Parameter discrete_sl2_parameter(const TorusElement& s) {
  if (!s.is_hyperbolic()) throw NonTrivialCompactPart("s has a nontrivial compact part");
  const L2Pair pair = construct_l2_pair(s);
  return {coweight_from_datum(pair.datum), true, true};
}

}  // namespace lietk
