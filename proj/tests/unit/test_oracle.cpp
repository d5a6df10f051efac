#include <gtest/gtest.h>

#include "lietk/orbits.hpp"
#include "oracle/oracle.hpp"

using namespace lietk;

namespace {

const std::vector<std::string> kRankAtMost3{"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2",
                                            "A1xA1", "A1xA2", "A1xB2", "A1xG2", "A1xA1xA1"};

}  // namespace

TEST(Oracle, CartanMatricesAgree) {
  for (const auto& t : kRankAtMost3) {
    const auto sys = build_root_system(t);
    const auto a = oracle::cartan(t);
    for (int i = 0; i < sys->rank(); ++i)
      for (int j = 0; j < sys->rank(); ++j) EXPECT_EQ(sys->cartan()[i][j], a[i][j]) << t;
  }
}

TEST(Oracle, RootSetsAgree) {
  for (const auto& t : kRankAtMost3) {
    const auto sys = build_root_system(t);
    const auto expected = oracle::roots(oracle::cartan(t));
    const std::set<IntVector> got(sys->roots().begin(), sys->roots().end());
    EXPECT_EQ(got.size(), sys->size()) << t;
    EXPECT_EQ(got, expected) << t;
  }
  // larger types as a count check
  for (const auto& [t, n] : std::vector<std::pair<std::string, std::size_t>>{{"F4", 48}, {"D4", 24}, {"B4", 32}})
    EXPECT_EQ(oracle::roots(oracle::cartan(t)).size(), n);
}

TEST(Oracle, DistinguishedSubsetsAgree) {
  for (const auto& t : kRankAtMost3) {
    const auto sub = whole_system(build_root_system(t));
    std::vector<unsigned> got;
    for (const auto& d : enumerate_distinguished(sub)) {
      unsigned m = 0;
      for (int k : d.weight2) m |= 1u << k;
      got.push_back(m);
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::distinguished_masks(oracle::cartan(t))) << t;
  }
}

TEST(Oracle, QVerdictsAgreeOnTheGrid) {
  const int r2s[] = {0, 1, 2, 4};
  for (const auto& t : kRankAtMost3) {
    const auto sys = build_root_system(t);
    const auto a = oracle::cartan(t);
    const int n = sys->rank();
    int cells = 1;
    for (int k = 0; k < n; ++k) cells *= 8;
    for (int c = 0; c < cells; ++c) {
      oracle::Vec r2(n), t2(n);
      std::vector<RootValue> vals;
      int x = c;
      for (int k = 0; k < n; ++k) {
        r2[k] = r2s[x % 4];
        t2[k] = (x / 4) % 2;
        x /= 8;
        vals.emplace_back(Rational(r2[k], 2), Rational(t2[k], 2));
      }
      const auto want = oracle::q_verdict(a, r2, t2);
      const auto got = is_q_distinguished(TorusElement(sys, vals));
      ASSERT_EQ(got.flag, want.flag) << t << " cell " << c;
      EXPECT_EQ(got.dim_q, want.dim_q);
      EXPECT_EQ(got.dim_1, want.dim_1);
    }
  }
}
