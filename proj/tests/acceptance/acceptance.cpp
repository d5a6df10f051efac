// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lietk/l2pair.hpp"
#include "lietk/lparam.hpp"
#include "lietk/mupole.hpp"
#include "lietk/orbits.hpp"
#include "lietk/random.hpp"
#include "oracle/oracle.hpp"

using namespace lietk;

namespace {

// Irreducible types by rank, then every product with total rank <= bound.
std::vector<std::string> types_up_to(int bound) {
  const std::vector<std::vector<std::string>> irreducible{
      {}, {"A1"}, {"A2", "B2", "C2", "G2"}, {"A3", "B3", "C3"}, {"A4", "B4", "C4", "D4", "F4"}};
  std::vector<std::pair<std::string, int>> flat;
  for (int r = 1; r <= bound && r < static_cast<int>(irreducible.size()); ++r)
    for (const auto& t : irreducible[r]) flat.emplace_back(t, r);
  std::vector<std::string> out;
  std::function<void(std::size_t, int, std::string)> grow = [&](std::size_t from, int rank, std::string name) {
    if (!name.empty()) out.push_back(name);
    for (std::size_t i = from; i < flat.size(); ++i)
      if (rank + flat[i].second <= bound) grow(i, rank + flat[i].second, name.empty() ? flat[i].first : name + "x" + flat[i].first);
  };
  grow(0, 0, "");
  return out;
}

// r in {0, 1/2, 1, 2}, theta in {0, 1/2} on each simple root.
template <class F>
void for_each_grid_element(const RootSystemPtr& sys, F&& f) {
  const Rational rs[] = {0, Rational(1, 2), 1, 2};
  const int n = sys->rank();
  long cells = 1;
  for (int k = 0; k < n; ++k) cells *= 8;
  for (long c = 0; c < cells; ++c) {
    std::vector<RootValue> vals;
    long x = c;
    for (int k = 0; k < n; ++k, x /= 8) vals.emplace_back(rs[x % 4], Rational((x / 4) % 2, 2));
    f(TorusElement(sys, vals));
  }
}

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_s) o.fail("over time limit");
  if (!o.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", secs, limit_s);
  std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << timing << ")";
  if (!o.note.empty()) std::cout << " - " << o.note;
  std::cout << "\n";
}

}  // namespace

int main() {
  const auto rank3 = types_up_to(3);
  const auto rank4 = types_up_to(4);

  report(1, "dim g0 >= dim g2 for every subset J, rank <= 4 and D5", 1.0, [&] {
    Outcome o;
    auto types = rank4;
    types.push_back("D5");
    long checked = 0;
    for (const auto& t : types) {
      const auto sub = whole_system(build_root_system(t));
      for (unsigned mask = 0; mask < (1u << sub.rank()); ++mask) {
        ParabolicDatum d{sub, {}};
        for (int k = 0; k < sub.rank(); ++k)
          if (mask >> k & 1u) d.weight2.push_back(k);
        const auto g = graded_dims(d);
        ++checked;
        if (g.dim0 < g.dim2) o.fail(t + " mask " + std::to_string(mask));
      }
    }
    o.note = o.ok ? std::to_string(types.size()) + " types, " + std::to_string(checked) + " subsets" : o.note;
    return o;
  });

  report(2, "distinguished parabolic counts match the golden table", 5.0, [&] {
    Outcome o;
    std::ifstream f(std::string(LIETK_GOLDEN_DIR) + "/orbit_counts.json");
    if (!f) {
      o.fail("golden file missing");
      return o;
    }
    const auto golden = nlohmann::ordered_json::parse(f).at("distinguished");
    for (const auto& [t, n] : golden.items()) {
      const auto got = enumerate_distinguished(whole_system(build_root_system(t))).size();
      if (got != n.get<std::size_t>()) o.fail(t + ": " + std::to_string(got) + " vs " + n.dump());
    }
    if (o.ok) o.note = std::to_string(golden.size()) + " types";
    return o;
  });

  long grid_cells = 0, grid_qdist = 0;
  std::vector<QDistinguishedVerdict> flagged;
  report(3, "q-distinguished iff an L2-pair is built, and every pair verifies (grid, rank <= 3)", 30.0, [&] {
    Outcome o;
    for (const auto& t : rank3) {
      for_each_grid_element(build_root_system(t), [&](const TorusElement& s) {
        ++grid_cells;
        const auto v = is_q_distinguished(s);
        bool built = false;
        try {
          const auto p = construct_l2_pair(s);
          built = true;
          if (!verify_l2_pair(p).ok) o.fail(t + ": pair does not verify");
        } catch (const NotQDistinguished&) {
        }
        if (built != v.flag) o.fail(t + ": verdict and construction disagree");
        if (v.flag) {
          ++grid_qdist;
          flagged.push_back(v);
        }
      });
    }
    if (o.ok) o.note = std::to_string(grid_cells) + " elements, " + std::to_string(grid_qdist) + " q-distinguished";
    return o;
  });

  report(4, "margin is 0 on every q-distinguished grid element", 1.0, [&] {
    Outcome o;
    if (flagged.empty()) o.fail("no q-distinguished elements collected");
    for (const auto& v : flagged)
      if (v.margin != 0) o.fail("margin " + std::to_string(v.margin));
    return o;
  });

  report(5, "mu-pole lines in {-2, 1, 0}; principal setting has order = rank = parabolic rank", 1.0, [&] {
    Outcome o;
    random::Rng rng(20260101);
    long settings = 0;
    for (const auto& t : rank4) {
      const auto sys = build_root_system(t);
      for (int k = 0; k < 20; ++k) {
        const auto [ms, s] = random::mu_setting(rng, sys);
        ++settings;
        try {
          for (const auto& e : total_order(ms, s).entries) {
            const int d = e.dq - e.d1;
            if (d != -2 && d != 1 && d != 0) o.fail(t + ": difference " + std::to_string(d));
          }
        } catch (const IllegalDifference& e) {
          o.fail(t + ": " + e.what());
        }
      }
      const auto ms = random::principal_setting(sys);
      const auto rho = random::rho_check(sys);
      const auto rep = square_integrable(ms, rho);
      if (!rep.ledger_total || *rep.ledger_total != sys->rank() || parabolic_rank(ms) != sys->rank() || !rep.flag)
        o.fail(t + ": principal setting");
    }
    if (o.ok) o.note = std::to_string(settings) + " settings over " + std::to_string(rank4.size()) + " types";
    return o;
  });

  report(6, "type_match: B/B and C/B for n = 2..4 match, A/D for n = 2, 4 do not", 1.0, [&] {
    Outcome o;
    auto w = [](const std::string& t) { return whole_system(build_root_system(t)); };
    for (int n = 2; n <= 4; ++n) {
      const auto b = "B" + std::to_string(n), c = "C" + std::to_string(n);
      if (!type_match(w(b), w(b)).match) o.fail(b + " vs " + b);
      if (!type_match(w(c), w(b)).match) o.fail(c + " vs " + b);
    }
    for (int n : {2, 4}) {
      const auto a = "A" + std::to_string(n), d = "D" + std::to_string(n);
      if (type_match(w(a), w(d)).match) o.fail(a + " vs " + d + " matched");
    }
    if (o.ok)
      o.note = std::string("A3 vs D3 informational: ") + (type_match(w("A3"), w("D3")).match ? "match" : "no match");
    return o;
  });

  report(7, "langlands_assemble after langlands_decompose is the identity (100 skeletons per type, rank <= 3)", 5.0,
         [&] {
           Outcome o;
           random::Rng rng(7);
           for (const auto& t : rank3) {
             const auto sys = build_root_system(t);
             for (int k = 0; k < 100; ++k) {
               const auto p = random::skeleton(rng, sys);
               const auto back = langlands_assemble(langlands_decompose(p));
               if (!(back.frob == p.frob) || back.cent.members() != p.cent.members()) o.fail(t + ": round trip");
             }
           }
           if (o.ok) o.note = std::to_string(100 * rank3.size()) + " skeletons";
           return o;
         });

  report(8, "brute-force oracle agrees on roots, distinguished subsets and q verdicts (rank <= 3)", 30.0, [&] {
    Outcome o;
    const int r2s[] = {0, 1, 2, 4};
    for (const auto& t : rank3) {
      const auto sys = build_root_system(t);
      const auto a = oracle::cartan(t);
      const std::set<IntVector> got(sys->roots().begin(), sys->roots().end());
      if (got != oracle::roots(a)) o.fail(t + ": roots");

      std::vector<unsigned> masks;
      for (const auto& d : enumerate_distinguished(whole_system(sys))) {
        unsigned m = 0;
        for (int k : d.weight2) m |= 1u << k;
        masks.push_back(m);
      }
      std::sort(masks.begin(), masks.end());
      if (masks != oracle::distinguished_masks(a)) o.fail(t + ": distinguished subsets");

      const int n = sys->rank();
      long cells = 1;
      for (int k = 0; k < n; ++k) cells *= 8;
      for (long c = 0; c < cells; ++c) {
        oracle::Vec r2(n), t2(n);
        std::vector<RootValue> vals;
        long x = c;
        for (int k = 0; k < n; ++k, x /= 8) {
          r2[k] = r2s[x % 4];
          t2[k] = static_cast<int>((x / 4) % 2);
          vals.emplace_back(Rational(r2[k], 2), Rational(t2[k], 2));
        }
        const auto want = oracle::q_verdict(a, r2, t2);
        const auto v = is_q_distinguished(TorusElement(sys, vals));
        if (v.flag != want.flag || v.dim_q != want.dim_q || v.dim_1 != want.dim_1) o.fail(t + ": q verdict");
      }
    }
    if (o.ok) o.note = std::to_string(rank3.size()) + " types";
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
