#pragma once

// Seeded generators of valid inputs: grid torus elements, mu-settings and
// parameter skeletons. Draws use raw mt19937_64 output so a seed gives the
// same object on every platform.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lietk/lparam.hpp"
#include "lietk/mupole.hpp"
#include "lietk/orbits.hpp"
#include "lietk/rootsys.hpp"
#include "lietk/torus.hpp"

namespace lietk::random {

using Rng = std::mt19937_64;

inline const std::vector<Rational>& grid_r() {
  static const std::vector<Rational> v{Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  return v;
}

inline const std::vector<Rational>& grid_theta() {
  static const std::vector<Rational> v{Rational(0), Rational(1, 2)};
  return v;
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& from) {
  return from[static_cast<std::size_t>(rng() % from.size())];
}

inline bool coin(Rng& rng) { return (rng() & 1u) != 0; }

inline std::vector<int> random_nodes(Rng& rng, int rank) {
  std::vector<int> nodes;
  for (int i = 0; i < rank; ++i)
    if (coin(rng)) nodes.push_back(i);
  return nodes;
}

inline TorusElement grid_torus(Rng& rng, const RootSystemPtr& sys) {
  std::vector<RootValue> v;
  for (int i = 0; i < sys->rank(); ++i) {
    const Rational r = pick(rng, grid_r());
    v.emplace_back(r, pick(rng, grid_theta()));
  }
  return {sys, std::move(v)};
}

/// Roots orthogonal to every simple root in `nodes`.
inline std::vector<std::size_t> orthogonal_roots(const RootSystem& sys, const std::vector<int>& nodes) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sys.size(); ++k) {
    bool ok = true;
    for (int i : nodes)
      if (sys.inner(sys.root(k), sys.root(sys.simple_root_index(i))) != 0) ok = false;
    if (ok) out.push_back(k);
  }
  return out;
}

/// Levi nodes empty, centralizer the whole system.
inline MuSetting principal_setting(const RootSystemPtr& sys) { return make_setting(sys, {}, whole_system(sys)); }

/// The element q^{rho^vee}: every simple root takes the value q.
inline TorusElement rho_check(const RootSystemPtr& sys) {
  return TorusElement::hyperbolic(sys, RationalVector(static_cast<std::size_t>(sys->rank()), Rational(1)));
}

/// A setting whose centralizer is orthogonal to the Levi, cut down by the
/// centralizer of a random element of order two.
inline std::pair<MuSetting, TorusElement> mu_setting(Rng& rng, const RootSystemPtr& sys) {
  const auto levi = random_nodes(rng, sys->rank());
  std::vector<RootValue> fin;
  for (int i = 0; i < sys->rank(); ++i) fin.emplace_back(Rational(0), pick(rng, grid_theta()));
  const TorusElement c(sys, fin);
  std::vector<std::size_t> members;
  for (auto k : orthogonal_roots(*sys, levi))
    if (c.value_on_root(k).is_one()) members.push_back(k);
  MuSetting ms = make_setting(sys, levi, closed_subsystem(sys, members));
  return {std::move(ms), grid_torus(rng, sys)};
}

/// frob is trivial-hyperbolic on the Levi nodes; the centralizer is every
/// root orthogonal to the Levi that frob fixes; half the time an SL2
/// coweight from a random distinguished datum of the centralizer is added.
inline ParameterSkeleton skeleton(Rng& rng, const RootSystemPtr& sys) {
  ParameterSkeleton p;
  p.ambient = sys;
  p.min_levi = random_nodes(rng, sys->rank());
  std::vector<RootValue> v;
  for (int i = 0; i < sys->rank(); ++i) {
    const bool in_levi = std::find(p.min_levi.begin(), p.min_levi.end(), i) != p.min_levi.end();
    const Rational r = in_levi ? Rational(0) : pick(rng, grid_r());
    v.emplace_back(r, pick(rng, grid_theta()));
  }
  p.frob = TorusElement(sys, v);
  std::vector<std::size_t> members;
  for (auto k : orthogonal_roots(*sys, p.min_levi))
    if (p.frob.value_on_root(k).is_one()) members.push_back(k);
  p.cent = closed_subsystem(sys, members);
  if (coin(rng)) {
    const auto data = enumerate_distinguished(p.cent);
    if (!data.empty()) p.sl2 = coweight_from_datum(pick(rng, data));
  }
  return p;
}

}  // namespace lietk::random
