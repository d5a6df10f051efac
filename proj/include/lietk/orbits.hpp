#pragma once

// Distinguished parabolic data, weighted Dynkin coweights and the
// Bala-Carter enumeration of nilpotent orbits by (Levi, distinguished
// parabolic of the Levi) pairs.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "lietk/linalg.hpp"
#include "lietk/rootsys.hpp"
#include "lietk/torus.hpp"

namespace lietk {

/// A subsystem together with the set J of its base nodes carrying weight 2.
/// The Levi of the parabolic is generated by the complement of J.
struct ParabolicDatum {
  Subsystem sub;
  std::vector<int> weight2;  ///< indices into sub.base(), ascending
};

namespace detail {

/// Coordinates of every member root of `sub` in its base, aligned with
/// sub.members().
inline std::vector<IntVector> member_coordinates(const Subsystem& sub) {
  const auto& sys = *sub.parent();
  const auto base = sub.base_vectors();
  const std::size_t k = base.size();
  std::vector<IntVector> out;
  out.reserve(sub.size());
  if (k == 0) {
    out.assign(sub.size(), IntVector{});
    return out;
  }
  // Pick k parent coordinates on which the base matrix is invertible.
  linalg::Matrix t(k, RationalVector(sys.rank()));
  for (std::size_t b = 0; b < k; ++b)
    for (int i = 0; i < sys.rank(); ++i) t[b][i] = base[b][i];
  const auto pivots = linalg::row_reduce(t);
  if (pivots.size() != k) throw SingularSystem("subsystem base is linearly dependent");
  linalg::Matrix square(k, RationalVector(k));
  for (std::size_t row = 0; row < k; ++row)
    for (std::size_t b = 0; b < k; ++b) square[row][b] = base[b][pivots[row]];
  linalg::Matrix inverse(k, RationalVector(k));
  for (std::size_t c = 0; c < k; ++c) {
    RationalVector e(k, Rational(0));
    e[c] = 1;
    const auto col = linalg::solve(square, e);
    if (!col) throw SingularSystem("subsystem base is linearly dependent");
    for (std::size_t r = 0; r < k; ++r) inverse[r][c] = (*col)[r];
  }
  for (auto m : sub.members()) {
    const auto& v = sys.root(m);
    IntVector c(k);
    for (std::size_t r = 0; r < k; ++r) {
      Rational x(0);
      for (std::size_t j = 0; j < k; ++j) x += inverse[r][j] * v[pivots[j]];
      c[r] = static_cast<int>(x.numerator());
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline int weight(const IntVector& coords, const std::vector<int>& weight2) {
  int s = 0;
  for (int j : weight2) s += coords[j];
  return 2 * s;
}

}  // namespace detail

/// n_J(beta) = 2 * (sum of beta's coordinates over J).
inline int weight_of_root(const ParabolicDatum& d, std::size_t parent_root) {
  if (!d.sub.contains(parent_root)) throw InvalidSetting("root is not a member of the datum's subsystem");
  return detail::weight(d.sub.sub_coordinates(parent_root), d.weight2);
}

struct GradedDims {
  int dim0 = 0;  ///< roots of weight 0 plus the Cartan rank
  int dim2 = 0;  ///< roots of weight 2
};

inline GradedDims graded_dims(const ParabolicDatum& d) {
  GradedDims g;
  for (const auto& c : detail::member_coordinates(d.sub)) {
    const int w = detail::weight(c, d.weight2);
    if (w == 0) ++g.dim0;
    else if (w == 2) ++g.dim2;
  }
  g.dim0 += d.sub.rank();
  assert(g.dim0 >= g.dim2);
  return g;
}

inline bool is_distinguished(const ParabolicDatum& d) {
  const auto g = graded_dims(d);
  return g.dim2 == g.dim0;
}

inline constexpr int kDefaultRankBound = 8;

/// All distinguished J of a subsystem, in increasing bitmask order
/// (bit k stands for base node k).
inline std::vector<ParabolicDatum> enumerate_distinguished(const Subsystem& sub, int rank_bound = kDefaultRankBound) {
  if (sub.rank() > rank_bound)
    throw RankBoundExceeded("subsystem rank " + std::to_string(sub.rank()) + " exceeds bound " +
                            std::to_string(rank_bound));
  const auto coords = detail::member_coordinates(sub);
  const int k = sub.rank();
  std::vector<ParabolicDatum> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    int n0 = 0, n2 = 0;
    for (const auto& c : coords) {
      int s = 0;
      for (int j = 0; j < k; ++j)
        if (mask & (1u << j)) s += c[j];
      if (s == 0) ++n0;
      else if (s == 1) ++n2;
    }
    if (n2 != k + n0) continue;
    ParabolicDatum d{sub, {}};
    for (int j = 0; j < k; ++j)
      if (mask & (1u << j)) d.weight2.push_back(j);
    out.push_back(std::move(d));
  }
  return out;
}

/// A coweight H in the span of a subsystem's coroots, recorded both by its
/// pairings with the sub-base and by its coefficients on the base coroots.
struct WeightedCoweight {
  Subsystem sub;
  RationalVector pairings;       ///< <beta_k, H> for beta_k in sub.base()
  RationalVector coroot_coeffs;  ///< H = sum_k c_k beta_k^vee
};

/// Solves for the unique H in the coroot span with the given base pairings.
inline WeightedCoweight coweight_from_pairings(const Subsystem& sub, const RationalVector& pairings) {
  const std::size_t k = sub.base().size();
  if (pairings.size() != k) throw InvalidSetting("coweight needs one pairing per base root");
  // <beta_l, H> = sum_k c_k <beta_l, beta_k^vee> = sum_k c_k cartan[k][l].
  linalg::Matrix a(k, RationalVector(k));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t c = 0; c < k; ++c) a[l][c] = sub.cartan()[c][l];
  const auto coeffs = linalg::solve(a, pairings);
  if (!coeffs) throw SingularSystem("subsystem Cartan matrix is singular");
  return {sub, pairings, *coeffs};
}

inline WeightedCoweight coweight_from_datum(const ParabolicDatum& d) {
  RationalVector p(d.sub.base().size(), Rational(0));
  for (int j : d.weight2) p[j] = 2;
  return coweight_from_pairings(d.sub, p);
}

/// <beta, H> for an arbitrary parent root-lattice vector beta.
inline Rational pairing_with(const WeightedCoweight& w, const IntVector& beta) {
  const auto& sys = *w.sub.parent();
  Rational s(0);
  for (std::size_t k = 0; k < w.coroot_coeffs.size(); ++k)
    if (w.coroot_coeffs[k] != 0) s += w.coroot_coeffs[k] * sys.coroot_pairing(beta, sys.root(w.sub.base()[k]));
  return s;
}

/// Pairings <alpha_i, H> with the parent's simple roots.
inline RationalVector ambient_pairings(const WeightedCoweight& w) {
  const auto& sys = *w.sub.parent();
  RationalVector out;
  for (int i = 0; i < sys.rank(); ++i) out.push_back(pairing_with(w, sys.root(sys.simple_root_index(i))));
  return out;
}

struct CoweightVerdict {
  bool distinguished = false;
  bool even = false;
  int dim0 = 0;
  int dim2 = 0;
};

inline CoweightVerdict is_distinguished_coweight(const WeightedCoweight& w) {
  CoweightVerdict v;
  v.even = true;
  const auto& sys = *w.sub.parent();
  for (auto m : w.sub.members()) {
    const Rational p = pairing_with(w, sys.root(m));
    if (p == 0) ++v.dim0;
    else if (p == 2) ++v.dim2;
    if (!is_integer(p) || p.numerator() % 2 != 0) v.even = false;
  }
  v.dim0 += w.sub.rank();
  v.distinguished = v.dim0 == v.dim2;
  return v;
}

/// The element s with alpha(s) = q^{<alpha, H>/2} on every simple root.
inline TorusElement torus_from_coweight(const WeightedCoweight& w) {
  RationalVector r = ambient_pairings(w);
  for (auto& x : r) x /= 2;
  return TorusElement::hyperbolic(w.sub.parent(), r);
}

struct OrbitLabel {
  std::vector<int> levi;     ///< parent base nodes generating the Levi
  std::vector<int> weight2;  ///< parent base nodes with weight 2 (subset of levi)
  RationalVector diagram;    ///< dominant pairings with the full base
};

struct BalaCarterResult {
  std::vector<OrbitLabel> labels;
  bool raw = false;  ///< true when Levi subsets were not Weyl-deduplicated
};

/// One label per (Levi class, distinguished datum of the Levi). Levi subsets
/// are visited by size, then in lexicographic node order.
inline BalaCarterResult bala_carter(const RootSystemPtr& sys, bool dedup = true,
                                    int rank_bound = kDefaultRankBound) {
  const int n = sys->rank();
  if (n > rank_bound)
    throw RankBoundExceeded("rank " + std::to_string(n) + " exceeds bound " + std::to_string(rank_bound));
  if (dedup && n > kBruteForceRankBound)
    throw RankBoundExceeded("Weyl deduplication of Levi subsets is limited to rank " +
                            std::to_string(kBruteForceRankBound) + "; rerun without dedup");
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    subsets.push_back(nodes);
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });

  BalaCarterResult result;
  result.raw = !dedup;
  std::set<std::vector<std::size_t>> seen;
  for (const auto& nodes : subsets) {
    const Subsystem levi = levi_subsystem(sys, nodes);
    if (dedup) {
      if (seen.count(levi.members())) continue;
      auto orbit = weyl_orbit_of_root_set(*sys, levi.members());
      seen.insert(orbit.begin(), orbit.end());
    }
    for (const auto& d : enumerate_distinguished(levi, rank_bound)) {
      OrbitLabel label;
      label.levi = nodes;
      for (int j : d.weight2) label.weight2.push_back(nodes[j]);
      label.diagram = weyl_dominantize(*sys, ambient_pairings(coweight_from_datum(d))).pairings;
      result.labels.push_back(std::move(label));
    }
  }
  return result;
}

}  // namespace lietk
