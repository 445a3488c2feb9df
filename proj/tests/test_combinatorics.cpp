#include <gtest/gtest.h>

#include "fockkit/combinatorics.hpp"

using namespace fockkit;

TEST(Partition, DropsTrailingZerosAndTransposes) {
  Partition p{3, 1, 0, 0};
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p.weight(), 4);
  EXPECT_EQ(p.transpose(), (Partition{2, 1, 1}));
  EXPECT_EQ(p.transpose().transpose(), p);
  EXPECT_EQ(p.n_statistic(), 1);
  EXPECT_EQ(p.transpose().n_statistic(), 3);
}

TEST(Partition, RejectsIncreasingParts) {
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_THROW(Partition({2, -1}), Error);
}

TEST(Partition, CountsMatchPartitionNumbers) {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(static_cast<int>(partitions_of(n).size()), counts[n]);
}

TEST(MultiPartition, CountsAndTranspose) {
  // number of l-partitions of n: coefficient of q^n in prod (1-q^k)^{-l}
  EXPECT_EQ(multipartitions_of(2, 2).size(), 5u);
  EXPECT_EQ(multipartitions_of(3, 2).size(), 10u);
  EXPECT_EQ(multipartitions_of(2, 3).size(), 9u);
  MultiPartition lam({Partition{2}, Partition{1, 1}});
  auto t = lam.transpose();
  EXPECT_EQ(t[0], (Partition{2}));
  EXPECT_EQ(t[1], (Partition{1, 1}));
  EXPECT_EQ(lam.transpose().transpose(), lam);
}

TEST(Composition, BlocksAndBullet) {
  Composition nu{2, 1, 6, 1};
  auto b = nu.blocks();
  ASSERT_EQ(b.size(), 4u);
  EXPECT_EQ(b[2], (Block{4, 9}));
  EXPECT_EQ(nu.block_of(4), 2);
  EXPECT_EQ(nu.block_of(10), 3);
  EXPECT_EQ(nu.bullet(), (Composition{6, 1, 2, 1}));
  EXPECT_EQ(nu.total(), 10);
}

TEST(Embedding, RoundTripOverFittingMultipartitions) {
  Composition nu{2, 1, 3};
  for (int n = 0; n <= 5; ++n)
    for (const auto& lam : multipartitions_fitting(n, nu)) {
      auto x = embed_weight(lam, nu);
      EXPECT_TRUE(is_nu_dominant_natural(x, nu));
      EXPECT_EQ(unembed_weight(x, nu), lam);
    }
  EXPECT_THROW(embed_weight(MultiPartition({Partition{1, 1, 1}, Partition{}, Partition{}}), nu), Error);
}

TEST(Rho, DecreasingToOne) { EXPECT_EQ(rho(4), (IntTuple{4, 3, 2, 1})); }
