#include "oracles.hpp"

#include "hhw/partitions.hpp"

#include <gtest/gtest.h>

namespace {

using hhw::Partition;

TEST(Partitions, ZeroHasTheEmptyPartition) {
  const auto p = hhw::enumerate_partitions(0);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].length(), 0);
  EXPECT_EQ(p[0].size(), 0);
}

TEST(Partitions, FourHasFivePartitions) {
  const auto p = hhw::enumerate_partitions(4);
  ASSERT_EQ(p.size(), 5u);
  const std::vector<std::vector<int>> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(p[i].parts(), want[i]);
}

TEST(Partitions, TenHasFortyTwo) { EXPECT_EQ(hhw::enumerate_partitions(10).size(), 42u); }

TEST(Partitions, CountMatchesPentagonalRecurrence) {
  const auto counts = oracle::partition_counts(40);
  for (int n = 0; n <= 40; ++n)
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(hhw::enumerate_partitions(n).size())),
              counts[static_cast<std::size_t>(n)])
        << n;
}

TEST(Partitions, ReverseLexicographicAndDistinct) {
  for (int n = 1; n <= 12; ++n) {
    const auto p = hhw::enumerate_partitions(n);
    for (std::size_t i = 1; i < p.size(); ++i) EXPECT_GT(p[i - 1].parts(), p[i].parts()) << n;
  }
}

TEST(Partitions, MultiplicityExamples) {
  const Partition lam({2, 1, 1});
  EXPECT_EQ(lam.multiplicity(1), 2);
  EXPECT_EQ(lam.multiplicity(2), 1);
  EXPECT_EQ(Partition({3}).multiplicity(2), 0);
}

TEST(Partitions, WeightedMultiplicitiesSumToN) {
  for (int n = 0; n <= 15; ++n)
    for (const Partition& lam : hhw::enumerate_partitions(n)) {
      int s = 0;
      for (int i = 1; i <= n; ++i) s += i * lam.multiplicity(i);
      EXPECT_EQ(s, n);
      EXPECT_EQ(lam.size(), n);
    }
}

TEST(Partitions, InvalidInputRejected) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_THROW(hhw::enumerate_partitions(-1), std::invalid_argument);
  EXPECT_THROW((void)Partition({2}).multiplicity(0), std::invalid_argument);
}

} // namespace
