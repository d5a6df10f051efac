#pragma once

// Parameter skeletons: the computable shadow of an admissible homomorphism
// W_F x SL2 -> ^LG. The Weil group is never represented; a skeleton records
// the value at Frobenius, the centralizer subsystem of the Weil image, the
// minimal Levi containing it and optionally the SL2 coweight. The element
// attached to gamma in W_F is frob^{v_F(gamma)}.

#include <optional>
#include <string>
#include <vector>

#include "lietk/l2pair.hpp"
#include "lietk/linalg.hpp"
#include "lietk/mupole.hpp"
#include "lietk/orbits.hpp"
#include "lietk/rootsys.hpp"
#include "lietk/torus.hpp"

namespace lietk {

struct ParameterSkeleton {
  RootSystemPtr ambient;
  std::vector<int> min_levi;
  Subsystem cent;
  TorusElement frob;
  std::optional<WeightedCoweight> sl2;  ///< defined on cent
};

/// Torus correspondence: lambda (pairings with the simple roots) maps to the
/// hyperbolic element with alpha_i(s) = q^{lambda_i}.
inline TorusElement tori_correspond(const RootSystemPtr& sys, const RationalVector& lambda) {
  return TorusElement::hyperbolic(sys, lambda);
}

/// The element beta^vee(q): alpha_i -> q^{<alpha_i, beta^vee>}.
inline TorusElement coroot_element(const RootSystemPtr& sys, const IntVector& beta) {
  if (!sys->is_root(beta)) throw InvalidSetting("coroot_element needs a root");
  RationalVector r;
  for (int i = 0; i < sys->rank(); ++i) r.emplace_back(sys->coroot_pairing(sys->root(sys->simple_root_index(i)), beta));
  return tori_correspond(sys, r);
}

struct FrobeniusSplit {
  TorusElement nr;   ///< unramified (hyperbolic) factor
  TorusElement fin;  ///< finite-order factor
  std::int64_t fin_order = 1;
};

inline FrobeniusSplit frobenius_split(const TorusElement& s) {
  auto [nr, fin] = polar_parts(s);
  const auto order = element_order(fin);
  return {std::move(nr), std::move(fin), order};
}

/// Rejects skeletons whose centralizer is not centralized by frob or meets
/// the Levi span.
inline void validate_skeleton(const ParameterSkeleton& p) {
  if (!p.ambient) throw MalformedSkeleton("missing ambient root system");
  for (int i : p.min_levi)
    if (i < 0 || i >= p.ambient->rank()) throw MalformedSkeleton("min_levi node out of range");
  if (p.frob.system() == nullptr || p.frob.rank() != p.ambient->rank())
    throw MalformedSkeleton("frob does not live on the ambient torus");
  if (!p.cent.parent() && !p.cent.empty()) throw MalformedSkeleton("centralizer has no parent");
  for (auto m : p.cent.members())
    if (!p.frob.value_on_root(m).is_one())
      throw MalformedSkeleton("centralizer root " + std::to_string(m) + " is not fixed by frob");
  std::vector<IntVector> span = p.cent.base_vectors();
  for (int i : p.min_levi) {
    IntVector e(static_cast<std::size_t>(p.ambient->rank()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    span.push_back(e);
  }
  if (static_cast<int>(linalg::rank_of(span)) != p.cent.rank() + static_cast<int>(p.min_levi.size()))
    throw MalformedSkeleton("centralizer span meets the span of the minimal Levi");
  if (p.sl2 && p.sl2->sub.members() != p.cent.members())
    throw MalformedSkeleton("SL2 coweight is not defined on the centralizer");
}

struct DiscreteReport {
  bool flag = false;
  bool rank_ok = false;
  bool pair_ok = false;
  std::vector<std::string> diagnostics;
};

/// Discrete iff the centralizer's semisimple rank equals the parabolic rank
/// of the minimal Levi and the SL2 image (or, without one, the hyperbolic
/// part of frob) forms an L^2-pair inside the centralizer.
inline DiscreteReport is_discrete(const ParameterSkeleton& p) {
  validate_skeleton(p);
  DiscreteReport rep;
  const MuSetting ms = make_setting(p.ambient, p.min_levi, p.cent);
  try {
    rep.rank_ok = center_rank_check(ms);
  } catch (const BoundViolated& e) {
    throw MalformedSkeleton(e.what());
  }
  if (!rep.rank_ok)
    rep.diagnostics.push_back("centralizer rank " + std::to_string(p.cent.rank()) + " differs from parabolic rank " +
                              std::to_string(parabolic_rank(ms)));
  const TorusElement s = p.sl2 ? torus_from_coweight(*p.sl2) : polar_parts(p.frob).first;
  try {
    const L2Pair pair = construct_l2_pair(s, p.cent);
    const auto check = verify_l2_pair(pair);
    rep.pair_ok = check.ok;
    for (const auto& d : check.diagnostics) rep.diagnostics.push_back(d);
  } catch (const NotQDistinguished& e) {
    rep.pair_ok = false;
    rep.diagnostics.push_back(std::string("no L2-pair in the centralizer: ") + e.what() + " (" + e.detail() + ")");
  }
  rep.flag = rep.rank_ok && rep.pair_ok;
  return rep;
}

struct LanglandsTriple {
  Subsystem m2;                    ///< Levi M'' (roots orthogonal to lambda2), based in the chamber
  RationalVector lambda2;          ///< <alpha_i, lambda_{M''}> for the ambient simple roots
  std::vector<IntVector> chamber;  ///< base of the positive system in which lambda2 is dominant
  ParameterSkeleton discrete_part;
};

inline LanglandsTriple langlands_decompose(const ParameterSkeleton& p) {
  validate_skeleton(p);
  const auto& sys = p.ambient;
  const TorusElement hyp = polar_parts(p.frob).first;
  for (int i : p.min_levi)
    if (hyp.values()[static_cast<std::size_t>(i)].r() != 0)
      throw NotHyperbolicCenter("hyperbolic part of frob is not central in the minimal Levi (node " +
                                std::to_string(i) + ")");

  LanglandsTriple t;
  t.lambda2 = hyp.r_vector();
  const Positivity chamber = hyperbolic_positivity(hyp);
  std::vector<std::size_t> orthogonal;
  for (std::size_t i = 0; i < sys->size(); ++i)
    if (hyp.value_on_root(i).r() == 0) orthogonal.push_back(i);
  t.m2 = closed_subsystem(sys, orthogonal, chamber);
  const Subsystem rebased = rebase(whole_system(sys), chamber);
  t.chamber = rebased.base_vectors();
  for (auto b : rebased.base()) {
    const Rational r = hyp.value_on_root(b).r();
    if (r < 0 || (r == 0 && !t.m2.contains(b)))
      throw NonDominantUnresolvable("lambda is not dominant on the chosen chamber");
  }
  t.discrete_part = p;
  t.discrete_part.frob = p.frob * tori_correspond(sys, t.lambda2).inverse();
  return t;
}

inline ParameterSkeleton langlands_assemble(const LanglandsTriple& t) {
  ParameterSkeleton p = t.discrete_part;
  p.frob = t.discrete_part.frob * tori_correspond(p.ambient, t.lambda2);
  return p;
}

}  // namespace lietk
