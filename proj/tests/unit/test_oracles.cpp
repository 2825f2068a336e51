// The oracles themselves against values that are known by hand.
#include <gtest/gtest.h>

#include "oracles.hpp"

TEST(Oracle, CosetCountsSmallLevels) {
  auto g0_11 = oracle::coset_counts_gamma0(11);
  EXPECT_EQ(g0_11.mu, 12);
  EXPECT_EQ(g0_11.nu_inf, 2);
  EXPECT_EQ(g0_11.genus(), 1);

  auto g0_2 = oracle::coset_counts_gamma0(2);
  EXPECT_EQ(g0_2.mu, 3);
  EXPECT_EQ(g0_2.nu2, 1);
  EXPECT_EQ(g0_2.nu3, 0);
  EXPECT_EQ(g0_2.genus(), 0);

  auto g1_20 = oracle::coset_counts_gamma1(20);
  EXPECT_EQ(g1_20.mu, 144);
  EXPECT_EQ(g1_20.nu_inf, 20);
  EXPECT_TRUE(g1_20.integral());
  EXPECT_EQ(g1_20.genus(), 3);

  EXPECT_EQ(oracle::coset_counts_gamma1(1).genus(), 0);
  EXPECT_EQ(oracle::coset_counts_gamma1(13).genus(), 2);
}

TEST(Oracle, CuspClassesGamma1Level5) {
  // X_1(5) has four cusps.
  EXPECT_EQ(oracle::cusp_classes(5, oracle::closure(5, {})).size(), 4u);
}

TEST(Oracle, CosetWidthsSumToIndex) {
  for (oracle::Int n : {6, 12, 20}) {
    oracle::Int total = 0;
    auto delta = oracle::closure(n, {});
    for (const auto& c : oracle::coset_cusps(n, delta)) total += c.width;
    EXPECT_EQ(total, oracle::coset_counts(n, delta).mu) << n;
  }
}
