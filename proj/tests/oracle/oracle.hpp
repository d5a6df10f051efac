#pragma once

// Brute-force reference used only by tests. Shares no code with the library:
// Cartan matrices are typed in by hand, roots come from the Weyl orbit of the
// simple roots, and torus values are handled as doubled integers.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

// a[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering, G2 long root first.
inline Mat simple_cartan(char family, int n) {
  Mat a(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      if (n >= 2) a[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      if (n >= 2) a[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case 'E':
      bond(0, 2);
      bond(1, 3);
      bond(2, 3);
      for (int i = 3; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    default:
      throw std::invalid_argument("unknown family");
  }
  return a;
}

/// "A1xB2" -> block-diagonal Cartan matrix.
inline Mat cartan(const std::string& type) {
  std::vector<Mat> blocks;
  std::size_t start = 0;
  while (start < type.size()) {
    auto end = type.find('x', start);
    if (end == std::string::npos) end = type.size();
    const std::string part = type.substr(start, end - start);
    blocks.push_back(simple_cartan(part[0], std::atoi(part.c_str() + 1)));
    start = end + 1;
  }
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  Mat a(n, Vec(n, 0));
  int off = 0;
  for (const auto& b : blocks) {
    const int k = static_cast<int>(b.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a[off + i][off + j] = b[i][j];
    off += k;
  }
  return a;
}

inline Vec reflect(const Mat& a, int i, Vec v) {
  int p = 0;
  for (std::size_t j = 0; j < v.size(); ++j) p += v[j] * a[i][j];
  v[i] -= p;
  return v;
}

/// All roots: the orbit of the simple roots under the simple reflections.
inline std::set<Vec> roots(const Mat& a) {
  const int n = static_cast<int>(a.size());
  std::set<Vec> seen;
  std::deque<Vec> todo;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    if (seen.insert(e).second) todo.push_back(e);
  }
  while (!todo.empty()) {
    const Vec v = todo.front();
    todo.pop_front();
    for (int i = 0; i < n; ++i) {
      Vec w = reflect(a, i, v);
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return seen;
}

/// Bitmasks J (bit k = simple root k) with dim g_0 = dim g_2.
inline std::vector<unsigned> distinguished_masks(const Mat& a) {
  const int n = static_cast<int>(a.size());
  const auto all = roots(a);
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int g0 = n, g2 = 0;
    for (const auto& v : all) {
      int w = 0;
      for (int k = 0; k < n; ++k)
        if (mask >> k & 1u) w += 2 * v[k];
      g0 += (w == 0);
      g2 += (w == 2);
    }
    if (g0 == g2) out.push_back(mask);
  }
  return out;
}

/// s given by doubled exponents r2[i] = 2 r_i and doubled phases t2[i] = 2 theta_i.
struct Verdict {
  bool flag;
  int dim_q;
  int dim_1;
};

inline Verdict q_verdict(const Mat& a, const Vec& r2, const Vec& t2) {
  const int n = static_cast<int>(a.size());
  int dq = 0, d1 = n;
  for (const auto& v : roots(a)) {
    int r = 0, t = 0;
    for (int k = 0; k < n; ++k) {
      r += v[k] * r2[k];
      t += v[k] * t2[k];
    }
    const bool phase_trivial = ((t % 2) + 2) % 2 == 0;
    if (phase_trivial && r == 2) ++dq;
    if (phase_trivial && r == 0) ++d1;
  }
  return {dq >= d1, dq, d1};
}

}  // namespace oracle
