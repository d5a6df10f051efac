#pragma once

// Pole-order bookkeeping for the Harish-Chandra mu-function: per reduced
// relative root line, the difference of the q- and 1-eigenspace dimensions
// of Ad(s) on the line's root spaces classifies the line as a zero (-2), a
// simple pole (+1) or regular (0); the total is the pole order.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lietk/rootsys.hpp"
#include "lietk/torus.hpp"

namespace lietk {

/// Reduced relative line of a root modulo the span of the Levi nodes: the
/// non-Levi coordinates divided by their gcd, first nonzero entry positive.
/// nullopt for roots inside the Levi span.
inline std::optional<IntVector> relative_line(const IntVector& root, const std::vector<int>& levi) {
  IntVector v = root;
  for (int i : levi) v[static_cast<std::size_t>(i)] = 0;
  int g = 0;
  for (int x : v) g = std::gcd(g, std::abs(x));
  if (g == 0) return std::nullopt;
  int sign = 0;
  for (int x : v)
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  for (auto& x : v) x = sign * x / g;
  return v;
}

struct MuSetting {
  RootSystemPtr ambient;
  std::vector<int> levi;
  Subsystem cent;
  /// cent member (parent root index) -> its line; nullopt marks Levi-internal roots.
  std::map<std::size_t, std::optional<IntVector>> line_map;
};

/// Builds a setting; `supplied` entries are checked against the projection
/// and missing entries are derived from it.
inline MuSetting make_setting(RootSystemPtr ambient, std::vector<int> levi, Subsystem cent,
                              const std::map<std::size_t, std::optional<IntVector>>& supplied = {}) {
  std::sort(levi.begin(), levi.end());
  levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
  for (int i : levi)
    if (i < 0 || i >= ambient->rank()) throw InvalidSetting("levi node " + std::to_string(i) + " out of range");
  if (cent.parent() && cent.parent() != ambient && cent.parent()->cartan() != ambient->cartan())
    throw InvalidSetting("centralizer subsystem lives in a different root system");
  MuSetting ms{ambient, levi, std::move(cent), {}};
  for (const auto& [idx, line] : supplied)
    if (!ms.cent.contains(idx)) throw InvalidSetting("line_map names a root outside the centralizer");
  for (auto m : ms.cent.members()) {
    const auto derived = relative_line(ambient->root(m), ms.levi);
    if (auto it = supplied.find(m); it != supplied.end() && it->second != derived)
      throw InvalidSetting("line_map entry disagrees with the projection modulo the Levi span");
    ms.line_map[m] = derived;
  }
  return ms;
}

/// Positive reduced relative roots, ordered by their first ambient root.
inline std::vector<IntVector> relative_roots(const MuSetting& ms) {
  std::vector<IntVector> out;
  std::set<IntVector> seen;
  for (auto i : ms.ambient->positives())
    if (auto line = relative_line(ms.ambient->root(i), ms.levi); line && seen.insert(*line).second)
      out.push_back(*line);
  return out;
}

struct LineDims {
  int dq = 0;
  int d1 = 0;
};

/// Eigenspace dimensions of Ad(s) on the root spaces of the line through
/// +-alpha (both signs; no toral part).
inline LineDims line_dims(const MuSetting& ms, const IntVector& line, const TorusElement& s) {
  const auto lines = relative_roots(ms);
  if (std::find(lines.begin(), lines.end(), line) == lines.end()) throw UnknownLine("line is not a relative root");
  LineDims d;
  for (const auto& [idx, l] : ms.line_map) {
    if (!l || *l != line) continue;
    const RootValue v = s.value_on_root(idx);
    if (v == RootValue::q()) ++d.dq;
    else if (v.is_one()) ++d.d1;
  }
  return d;
}

enum class PoleClass { Zero = -2, Pole = 1, Regular = 0 };

inline const char* to_string(PoleClass c) {
  switch (c) {
    case PoleClass::Zero: return "Zero";
    case PoleClass::Pole: return "Pole";
    case PoleClass::Regular: return "Regular";
  }
  return "?";
}

inline PoleClass classify_line(int dq, int d1) {
  switch (dq - d1) {
    case -2: return PoleClass::Zero;
    case 1: return PoleClass::Pole;
    case 0: return PoleClass::Regular;
    default:
      throw IllegalDifference("dim u(q) - dim u(1) = " + std::to_string(dq - d1) + " (dq=" + std::to_string(dq) +
                              ", d1=" + std::to_string(d1) + ") is not one of -2, 1, 0");
  }
}

struct PoleLedger {
  struct Entry {
    IntVector line;
    int dq = 0;
    int d1 = 0;
    PoleClass cls = PoleClass::Regular;
  };
  std::vector<Entry> entries;
  int total = 0;
};

inline PoleLedger total_order(const MuSetting& ms, const TorusElement& s) {
  PoleLedger ledger;
  for (const auto& line : relative_roots(ms)) {
    const auto d = line_dims(ms, line, s);
    const PoleClass c = classify_line(d.dq, d.d1);
    ledger.entries.push_back({line, d.dq, d.d1, c});
    ledger.total += static_cast<int>(c);
  }
  return ledger;
}

inline int parabolic_rank(const MuSetting& ms) { return ms.ambient->rank() - static_cast<int>(ms.levi.size()); }

/// True iff the semisimple rank of the centralizer equals the parabolic rank
/// of the Levi; the former may never exceed the latter.
inline bool center_rank_check(const MuSetting& ms) {
  const int bound = parabolic_rank(ms);
  if (ms.cent.rank() > bound)
    throw BoundViolated("centralizer rank " + std::to_string(ms.cent.rank()) + " exceeds parabolic rank " +
                        std::to_string(bound));
  return ms.cent.rank() == bound;
}

struct SquareIntegrableReport {
  bool flag = false;
  bool rank_ok = false;
  int cent_rank = 0;
  int parabolic_rank = 0;
  QDistinguishedVerdict qdist;
  std::optional<int> ledger_total;
  std::string ledger_error;
};

inline SquareIntegrableReport square_integrable(const MuSetting& ms, const TorusElement& s) {
  SquareIntegrableReport rep;
  rep.cent_rank = ms.cent.rank();
  rep.parabolic_rank = parabolic_rank(ms);
  rep.rank_ok = rep.cent_rank == rep.parabolic_rank;
  rep.qdist = is_q_distinguished(s, ms.cent);
  rep.flag = rep.rank_ok && rep.qdist.flag;
  try {
    rep.ledger_total = total_order(ms, s).total;
  } catch (const Error& e) {
    rep.ledger_error = e.kind() + ": " + e.what();
  }
  return rep;
}

struct TypeMatchVerdict {
  bool match = false;
  std::vector<std::pair<CartanType, CartanType>> exact;
  std::vector<std::pair<CartanType, CartanType>> bc_ambiguous;
  std::vector<CartanType> unmatched_left;
  std::vector<CartanType> unmatched_right;
};

/// Compares the components of `centA` with those of the coroot system of
/// `sigma0`; a B_n component may stand for C_n and vice versa.
inline TypeMatchVerdict type_match(const Subsystem& centA, const Subsystem& sigma0) {
  auto left = irreducible_components(centA);
  auto right = irreducible_components(dual_system(sigma0));
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  TypeMatchVerdict v;
  std::vector<CartanType> rest_left;
  for (const auto& t : left) {
    auto it = std::find(right.begin(), right.end(), t);
    if (it != right.end()) {
      v.exact.emplace_back(t, *it);
      right.erase(it);
    } else {
      rest_left.push_back(t);
    }
  }
  for (const auto& t : rest_left) {
    auto it = std::find_if(right.begin(), right.end(), [&](const CartanType& u) {
      const bool bc = (t.family == Family::B && u.family == Family::C) ||
                      (t.family == Family::C && u.family == Family::B);
      return bc && t.rank == u.rank;
    });
    if (it != right.end()) {
      v.bc_ambiguous.emplace_back(t, *it);
      right.erase(it);
    } else {
      v.unmatched_left.push_back(t);
    }
  }
  v.unmatched_right = right;
  v.match = v.unmatched_left.empty() && v.unmatched_right.empty();
  return v;
}

}  // namespace lietk
