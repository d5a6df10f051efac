#pragma once

// Finite root systems in simple-root coordinates, closed subsystems, Dynkin
// identification, coroot duals, diagram automorphisms and dominant-chamber
// walks. Everything is exact integer/rational arithmetic.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lietk/errors.hpp"
#include "lietk/linalg.hpp"
#include "lietk/rational.hpp"

namespace lietk {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
};

inline void validate(const CartanType& t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 1; break;
    case Family::D: ok = n >= 2; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) throw InvalidType("rank " + std::to_string(n) + " is out of range for family " +
                             std::string(1, family_letter(t.family)));
}

inline CartanType parse_cartan_type(const std::string& text) {
  if (text.size() < 2) throw InvalidType("malformed Cartan type '" + text + "'");
  const std::string letters = "ABCDEFG";
  const auto pos = letters.find(static_cast<char>(std::toupper(static_cast<unsigned char>(text[0]))));
  if (pos == std::string::npos) throw InvalidType("unknown family in '" + text + "'");
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])) || rank > 1000)
      throw InvalidType("malformed Cartan type '" + text + "'");
    rank = rank * 10 + (text[i] - '0');
  }
  CartanType t{static_cast<Family>(pos), rank};
  validate(t);
  return t;
}

/// Parses a product such as "A1xA1" or "B2xG2".
inline std::vector<CartanType> parse_cartan_types(const std::string& text) {
  std::vector<CartanType> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto next = text.find_first_of("x*", start);
    if (next == std::string::npos) next = text.size();
    out.push_back(parse_cartan_type(text.substr(start, next - start)));
    start = next + 1;
  }
  return out;
}

inline std::string types_name(const std::vector<CartanType>& types) {
  std::string s;
  for (const auto& t : types) {
    if (!s.empty()) s += "x";
    s += t.name();
  }
  return s;
}

namespace detail {

using IntMatrix = std::vector<IntVector>;

/// Symmetric Gram matrix (doubled so every entry is an integer) for the
/// Bourbaki-numbered diagram of `t`. G2 puts the long root first.
inline IntMatrix gram_matrix(const CartanType& t) {
  const int n = t.rank;
  IntMatrix g(n, IntVector(n, 0));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) g[i][i] = 4;
      g[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      if (n >= 2) link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n - 2; ++i) link(i, i + 1, -1);
      if (n >= 3) {
        link(n - 3, n - 2, -1);
        link(n - 3, n - 1, -1);
      }
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      g[0][0] = 6;
      g[1][1] = 2;
      link(0, 1, -3);
      break;
  }
  return g;
}

inline IntMatrix cartan_from_gram(const IntMatrix& g) {
  const std::size_t n = g.size();
  IntMatrix a(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = 2 * g[i][j] / g[i][i];
  return a;
}

/// Root order: height ascending, then coordinates lexicographically
/// descending (so the simple roots come out as alpha_1, ..., alpha_n).
inline bool root_less(const IntVector& a, const IntVector& b) {
  const int ha = std::accumulate(a.begin(), a.end(), 0);
  const int hb = std::accumulate(b.begin(), b.end(), 0);
  if (ha != hb) return ha < hb;
  return a > b;
}

inline IntVector negate(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace detail

/// A finite reduced root system. Roots are integer vectors in simple-root
/// coordinates; the Cartan matrix satisfies cartan[i][j] = <alpha_j, alpha_i^vee>.
class RootSystem {
 public:
  using IntMatrix = detail::IntMatrix;

  /// Builds the system generated by a Cartan matrix. `types` only labels it.
  RootSystem(std::string name, std::vector<CartanType> types, IntMatrix cartan)
      : name_(std::move(name)), types_(std::move(types)), cartan_(std::move(cartan)) {
    rank_ = static_cast<int>(cartan_.size());
    compute_symmetrizer();
    generate();
  }

  const std::string& name() const { return name_; }
  const std::vector<CartanType>& types() const { return types_; }
  int rank() const { return rank_; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<IntVector>& roots() const { return roots_; }
  const IntVector& root(std::size_t i) const { return roots_[i]; }
  std::size_t size() const { return roots_.size(); }
  const std::vector<std::size_t>& positives() const { return positives_; }
  bool is_positive(std::size_t i) const { return is_positive_[i]; }
  /// Squared length (alpha_i, alpha_i) of each simple root; shortest roots
  /// in every component have length 2.
  const IntVector& symmetrizer() const { return sym_; }

  std::optional<std::size_t> index_of(const IntVector& v) const {
    const auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_root(const IntVector& v) const { return index_.count(v) != 0; }
  std::size_t negative_of(std::size_t i) const { return negation_[i]; }

  std::size_t simple_root_index(int i) const { return simple_[static_cast<std::size_t>(i)]; }

  /// Symmetric bilinear form (x, y) on the root lattice.
  template <typename Vec>
  auto inner(const Vec& x, const Vec& y) const {
    using T = std::decay_t<decltype(x[0])>;
    T s = T(0);
    for (int i = 0; i < rank_; ++i) {
      if (x[i] == T(0)) continue;
      for (int j = 0; j < rank_; ++j) s += x[i] * y[j] * T(sym_[i] * cartan_[i][j]) / T(2);
    }
    return s;
  }

  /// <x, beta^vee> = 2 (x, beta) / (beta, beta) for a root beta.
  int coroot_pairing(const IntVector& x, const IntVector& beta) const {
    return 2 * inner(x, beta) / inner(beta, beta);
  }

  /// Coordinates of beta^vee in the basis of simple coroots.
  IntVector coroot_coordinates(const IntVector& beta) const {
    const int len = inner(beta, beta);
    IntVector c(rank_);
    for (int i = 0; i < rank_; ++i) c[i] = beta[i] * sym_[i] / len;
    return c;
  }

  int height(std::size_t i) const { return std::accumulate(roots_[i].begin(), roots_[i].end(), 0); }

  /// Simple reflection s_i applied to a root-lattice vector.
  template <typename Vec>
  Vec reflect(int i, Vec v) const {
    using T = std::decay_t<decltype(v[0])>;
    T p = T(0);
    for (int j = 0; j < rank_; ++j) p += v[j] * T(cartan_[i][j]);
    v[i] -= p;
    return v;
  }

 private:
  void compute_symmetrizer() {
    std::vector<Rational> d(rank_, Rational(0));
    std::vector<int> comp(rank_, -1);
    int ncomp = 0;
    for (int s = 0; s < rank_; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> stack{s};
      comp[s] = ncomp;
      d[s] = 1;
      while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < rank_; ++j) {
          if (i == j || cartan_[i][j] == 0) continue;
          if (cartan_[j][i] == 0) throw InvalidType("Cartan matrix is not symmetrizable");
          const Rational dj = d[i] * Rational(cartan_[i][j], cartan_[j][i]);
          if (comp[j] < 0) {
            comp[j] = ncomp;
            d[j] = dj;
            stack.push_back(j);
          } else if (d[j] != dj) {
            throw InvalidType("Cartan matrix is not symmetrizable");
          }
        }
      }
      ++ncomp;
    }
    sym_.assign(rank_, 0);
    for (int c = 0; c < ncomp; ++c) {
      Rational smallest(0);
      for (int i = 0; i < rank_; ++i)
        if (comp[i] == c && (smallest == 0 || d[i] < smallest)) smallest = d[i];
      for (int i = 0; i < rank_; ++i)
        if (comp[i] == c) {
          const Rational v = d[i] / smallest * 2;
          if (!is_integer(v)) throw InvalidType("Cartan matrix has non-integral symmetrizer");
          sym_[i] = static_cast<int>(v.numerator());
        }
    }
  }

  // Positive roots by height: beta + alpha_i is a root iff q > 0 where
  // p - q = <beta, alpha_i^vee> and p is the length of the downward string.
  void generate() {
    std::vector<IntVector> positive;
    std::set<IntVector> seen;
    for (int i = 0; i < rank_; ++i) {
      IntVector e(rank_, 0);
      e[i] = 1;
      positive.push_back(e);
      seen.insert(e);
    }
    for (std::size_t k = 0; k < positive.size(); ++k) {
      const IntVector beta = positive[k];
      for (int i = 0; i < rank_; ++i) {
        int p = 0;
        IntVector down = beta;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < rank_; ++j) pairing += beta[j] * cartan_[i][j];
        const int q = p - pairing;
        if (q > 0) {
          IntVector up = beta;
          up[i] += 1;
          if (seen.insert(up).second) positive.push_back(up);
        }
      }
      if (positive.size() > 100000) throw InvalidType("Cartan matrix is not of finite type");
    }
    roots_ = positive;
    for (const auto& r : positive) roots_.push_back(detail::negate(r));
    std::sort(roots_.begin(), roots_.end(), detail::root_less);
    is_positive_.resize(roots_.size());
    negation_.resize(roots_.size());
    for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], i);
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      is_positive_[i] = std::accumulate(roots_[i].begin(), roots_[i].end(), 0) > 0;
      if (is_positive_[i]) positives_.push_back(i);
      negation_[i] = index_.at(detail::negate(roots_[i]));
    }
    simple_.resize(rank_);
    for (int i = 0; i < rank_; ++i) {
      IntVector e(rank_, 0);
      e[i] = 1;
      simple_[i] = index_.at(e);
    }
  }

  std::string name_;
  std::vector<CartanType> types_;
  IntMatrix cartan_;
  int rank_ = 0;
  IntVector sym_;
  std::vector<IntVector> roots_;
  std::vector<std::size_t> positives_;
  std::vector<bool> is_positive_;
  std::vector<std::size_t> negation_;
  std::vector<std::size_t> simple_;
  std::map<IntVector, std::size_t> index_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystem::IntMatrix cartan_matrix(const std::vector<CartanType>& types) {
  int n = 0;
  for (const auto& t : types) {
    validate(t);
    n += t.rank;
  }
  RootSystem::IntMatrix a(n, IntVector(n, 0));
  int offset = 0;
  for (const auto& t : types) {
    const auto block = detail::cartan_from_gram(detail::gram_matrix(t));
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) a[offset + i][offset + j] = block[i][j];
    offset += t.rank;
  }
  return a;
}

inline RootSystemPtr build_root_system(const std::vector<CartanType>& types) {
  if (types.empty()) throw InvalidType("empty Cartan type list");
  return std::make_shared<const RootSystem>(types_name(types), types, cartan_matrix(types));
}

inline RootSystemPtr build_root_system(const CartanType& t) {
  return build_root_system(std::vector<CartanType>{t});
}

inline RootSystemPtr build_root_system(const std::string& text) {
  return build_root_system(parse_cartan_types(text));
}

/// Positivity predicate on parent root indices; must come from a generic
/// linear functional so that the result is a genuine positive system.
using Positivity = std::function<bool(std::size_t)>;

/// A closed subsystem of a parent root system, with a base extracted as the
/// indecomposable positive members.
class Subsystem {
 public:
  Subsystem() = default;

  const RootSystemPtr& parent() const { return parent_; }
  const std::vector<std::size_t>& members() const { return members_; }
  const std::vector<std::size_t>& positives() const { return positives_; }
  /// Base as parent root indices.
  const std::vector<std::size_t>& base() const { return base_; }
  const RootSystem::IntMatrix& cartan() const { return cartan_; }
  int rank() const { return static_cast<int>(base_.size()); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::size_t parent_index) const {
    return std::binary_search(members_.begin(), members_.end(), parent_index);
  }
  std::vector<IntVector> base_vectors() const {
    std::vector<IntVector> out;
    for (auto i : base_) out.push_back(parent_->root(i));
    return out;
  }
  /// Coordinates of a member root in the sub-base (nonneg for positives).
  IntVector sub_coordinates(std::size_t parent_index) const {
    linalg::Matrix m(parent_->rank(), RationalVector(base_.size() + 1));
    for (std::size_t k = 0; k < base_.size(); ++k)
      for (int i = 0; i < parent_->rank(); ++i) m[i][k] = parent_->root(base_[k])[i];
    for (int i = 0; i < parent_->rank(); ++i) m[i][base_.size()] = parent_->root(parent_index)[i];
    linalg::row_reduce(m);
    IntVector c(base_.size());
    for (std::size_t k = 0; k < base_.size(); ++k) c[k] = static_cast<int>(m[k][base_.size()].numerator());
    return c;
  }

  friend Subsystem closed_subsystem(const RootSystemPtr&, const std::vector<std::size_t>&, const Positivity&);

 private:
  RootSystemPtr parent_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> positives_;
  std::vector<std::size_t> base_;
  RootSystem::IntMatrix cartan_;
};

/// Closes `members` under negation and addition inside the parent, then
/// extracts the base relative to `positive`.
inline Subsystem closed_subsystem(const RootSystemPtr& sys, const std::vector<std::size_t>& members,
                                  const Positivity& positive) {
  Subsystem sub;
  sub.parent_ = sys;
  std::vector<bool> in(sys->size(), false);
  std::vector<std::size_t> list;
  auto insert = [&](std::size_t i) {
    if (!in[i]) {
      in[i] = true;
      list.push_back(i);
    }
  };
  for (auto m : members) {
    insert(m);
    insert(sys->negative_of(m));
  }
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = 0; b < list.size(); ++b) {
      if (auto s = sys->index_of(detail::add(sys->root(list[a]), sys->root(list[b])))) insert(*s);
    }
  }
  std::sort(list.begin(), list.end());
  sub.members_ = list;
  for (auto i : list)
    if (positive(i)) sub.positives_.push_back(i);

  for (auto i : sub.positives_) {
    bool decomposable = false;
    for (auto a : sub.positives_) {
      if (a == i) continue;
      IntVector diff = sys->root(i);
      for (int k = 0; k < sys->rank(); ++k) diff[k] -= sys->root(a)[k];
      if (auto d = sys->index_of(diff); d && in[*d] && positive(*d)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) sub.base_.push_back(i);
  }

  // Cartan integers from root strings: the gamma-string through beta is
  // beta - p gamma, ..., beta + q gamma and <beta, gamma^vee> = p - q.
  const std::size_t n = sub.base_.size();
  sub.cartan_.assign(n, IntVector(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) {
        sub.cartan_[k][l] = 2;
        continue;
      }
      const auto& gamma = sys->root(sub.base_[k]);
      const auto& beta = sys->root(sub.base_[l]);
      auto string_length = [&](int sign) {
        int len = 0;
        IntVector v = beta;
        while (true) {
          for (int c = 0; c < sys->rank(); ++c) v[c] += sign * gamma[c];
          if (!sys->is_root(v)) break;
          ++len;
        }
        return len;
      };
      sub.cartan_[k][l] = string_length(-1) - string_length(+1);
    }
  }
  return sub;
}

inline Subsystem closed_subsystem(const RootSystemPtr& sys, const std::vector<std::size_t>& members) {
  return closed_subsystem(sys, members, [&](std::size_t i) { return sys->is_positive(i); });
}

inline Subsystem whole_system(const RootSystemPtr& sys) {
  std::vector<std::size_t> all(sys->size());
  std::iota(all.begin(), all.end(), 0);
  return closed_subsystem(sys, all);
}

/// Closed subsystem spanned by a subset of simple roots (a standard Levi).
inline Subsystem levi_subsystem(const RootSystemPtr& sys, const std::vector<int>& nodes) {
  std::vector<std::size_t> gens;
  for (int i : nodes) gens.push_back(sys->simple_root_index(i));
  return closed_subsystem(sys, gens);
}

/// Same member set with the base recomputed for another positivity rule.
inline Subsystem rebase(const Subsystem& sub, const Positivity& positive) {
  return closed_subsystem(sub.parent(), sub.members(), positive);
}

/// Identifies the finite type of a connected Cartan matrix.
inline CartanType identify_connected(const RootSystem::IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  auto fail = [&](const std::string& why) -> CartanType {
    throw UnrecognizedDiagram("Cartan matrix of size " + std::to_string(n) + " is not of finite type: " + why);
  };
  if (n == 0) fail("empty");
  for (int i = 0; i < n; ++i) {
    if (a[i][i] != 2) fail("diagonal entry differs from 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) fail("sign pattern");
    }
  }
  if (n == 1) return {Family::A, 1};
  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[i][j] != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
        if (a[i][j] * a[j][i] > 3) fail("bond of multiplicity > 3");
      }
  if (edges != n - 1) fail("diagram is not a tree");
  std::vector<int> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) fail("diagram is disconnected");

  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 3) fail("node of degree > 3");
    if (adj[i].size() == 3) {
      if (branch >= 0) fail("two branch nodes");
      branch = i;
    }
  }
  std::vector<std::pair<int, int>> multi;
  for (int i = 0; i < n; ++i)
    for (int j : adj[i])
      if (i < j && a[i][j] * a[j][i] > 1) multi.emplace_back(i, j);

  if (branch >= 0) {
    if (!multi.empty()) fail("branched diagram with multiple bond");
    std::vector<int> arms;
    for (int start : adj[branch]) {
      int len = 1, prev = branch, cur = start;
      while (true) {
        int next = -1;
        for (int w : adj[cur])
          if (w != prev) next = w;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, n};
    return fail("branched diagram with arms " + std::to_string(arms[0]) + "," + std::to_string(arms[1]) + "," +
                std::to_string(arms[2]));
  }
  if (multi.empty()) return {Family::A, n};
  if (multi.size() > 1) fail("more than one multiple bond");
  const auto [u, v] = multi.front();
  const int product = a[u][v] * a[v][u];
  if (product == 3) {
    if (n != 2) fail("triple bond in rank > 2");
    return {Family::G, 2};
  }
  if (n == 2) return {Family::B, 2};
  const bool u_end = adj[u].size() == 1;
  const bool v_end = adj[v].size() == 1;
  if (!u_end && !v_end) {
    if (n == 4) return {Family::F, 4};
    return fail("interior double bond in rank " + std::to_string(n));
  }
  const int end = u_end ? u : v;
  const int other = u_end ? v : u;
  // |<alpha_other, alpha_end^vee>| = 2 means the end node is short.
  return {std::abs(a[end][other]) == 2 ? Family::B : Family::C, n};
}

/// Connected components of a Cartan matrix as lists of node indices, ordered
/// by their smallest node.
inline std::vector<std::vector<int>> diagram_components(const RootSystem::IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && a[nodes[k]][j] != 0) {
          comp[j] = comp[s];
          nodes.push_back(j);
        }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(nodes);
  }
  return out;
}

inline std::vector<CartanType> identify_cartan(const RootSystem::IntMatrix& a) {
  std::vector<CartanType> out;
  for (const auto& nodes : diagram_components(a)) {
    RootSystem::IntMatrix block(nodes.size(), IntVector(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j) block[i][j] = a[nodes[i]][nodes[j]];
    out.push_back(identify_connected(block));
  }
  return out;
}

inline std::vector<CartanType> irreducible_components(const Subsystem& sub) {
  return identify_cartan(sub.cartan());
}

/// Sorted component list, e.g. "A1xA1"; "0" for the empty system.
inline std::string component_string(std::vector<CartanType> types) {
  if (types.empty()) return "0";
  std::sort(types.begin(), types.end());
  return types_name(types);
}

inline CartanType dual_type(CartanType t) {
  if (t.family == Family::B && t.rank >= 3) t.family = Family::C;
  else if (t.family == Family::C && t.rank >= 3) t.family = Family::B;
  return t;
}

/// The coroot system of a parent, realized on the transposed Cartan matrix.
inline RootSystemPtr dual_root_system(const RootSystem& sys) {
  const int n = sys.rank();
  RootSystem::IntMatrix t(n, IntVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = sys.cartan()[j][i];
  std::vector<CartanType> types;
  for (const auto& ty : sys.types()) types.push_back(dual_type(ty));
  return std::make_shared<const RootSystem>(types_name(types), types, std::move(t));
}

/// The coroot system {2 beta / (beta, beta)} of a subsystem, as a root
/// system of its own on the transposed sub-Cartan matrix. It is not placed
/// inside the dual parent: a closed subsystem's coroots need not be closed
/// there (the long A1xA1 in B2 has short coroots summing to a long coroot).
inline Subsystem dual_system(const Subsystem& sub) {
  const int k = sub.rank();
  RootSystem::IntMatrix t(k, IntVector(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i][j] = sub.cartan()[j][i];
  auto types = identify_cartan(t);
  auto sys = std::make_shared<const RootSystem>(component_string(types), types, std::move(t));
  return whole_system(sys);
}

struct DiagramAutomorphism {
  std::vector<int> permutation;
};

/// Dimension of the subspace of the base span fixed by a diagram automorphism
/// (the number of cycles of the permutation).
inline int fixed_corank(const RootSystem& sys, const DiagramAutomorphism& a) {
  const int n = sys.rank();
  const auto& p = a.permutation;
  if (static_cast<int>(p.size()) != n) throw NotAnAutomorphism("permutation size differs from rank");
  std::vector<int> sorted(p);
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[i] != i) throw NotAnAutomorphism("not a permutation of the base");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sys.cartan()[p[i]][p[j]] != sys.cartan()[i][j])
        throw NotAnAutomorphism("permutation does not preserve the Cartan matrix");
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

struct DominantResult {
  RationalVector pairings;
  int word_length = 0;
};

/// Moves a coweight, given by its pairings <alpha_i, H>, into the dominant
/// chamber by simple reflections. The first negative pairing is reflected
/// each time, so the count is the length of the minimal Weyl element.
inline DominantResult weyl_dominantize(const RootSystem& sys, RationalVector pairings) {
  const int n = sys.rank();
  DominantResult out;
  while (true) {
    int i = 0;
    while (i < n && pairings[i] >= 0) ++i;
    if (i == n) break;
    const Rational p = pairings[i];
    for (int j = 0; j < n; ++j) pairings[j] -= p * sys.cartan()[i][j];
    ++out.word_length;
  }
  out.pairings = std::move(pairings);
  return out;
}

inline constexpr int kBruteForceRankBound = 6;

/// Orbit of a set of parent roots under the Weyl group, by breadth-first
/// walk with simple reflections. Each set is returned sorted.
inline std::set<std::vector<std::size_t>> weyl_orbit_of_root_set(const RootSystem& sys,
                                                                   std::vector<std::size_t> start) {
  if (sys.rank() > kBruteForceRankBound)
    throw RankBoundExceeded("Weyl orbit walks are limited to rank " + std::to_string(kBruteForceRankBound));
  std::vector<std::vector<std::size_t>> reflected(sys.rank(), std::vector<std::size_t>(sys.size()));
  for (int i = 0; i < sys.rank(); ++i)
    for (std::size_t r = 0; r < sys.size(); ++r) reflected[i][r] = *sys.index_of(sys.reflect(i, sys.root(r)));
  std::sort(start.begin(), start.end());
  std::set<std::vector<std::size_t>> orbit{start};
  std::vector<std::vector<std::size_t>> queue{start};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int i = 0; i < sys.rank(); ++i) {
      std::vector<std::size_t> img;
      img.reserve(queue[k].size());
      for (auto r : queue[k]) img.push_back(reflected[i][r]);
      std::sort(img.begin(), img.end());
      if (orbit.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return orbit;
}

}  // namespace lietk
