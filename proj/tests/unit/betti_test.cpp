#include "oracles.hpp"

#include "hhw/betti.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using hhw::BettiTable;

std::map<int, long> plain(const BettiTable& t) {
  std::map<int, long> out;
  for (const auto& [deg, dim] : t.entries()) out[deg] = dim.get_si();
  return out;
}

BettiTable from_plain(const std::map<int, long>& m) {
  BettiTable t;
  for (const auto& [deg, dim] : m) t.set(deg, dim);
  return t;
}

BettiTable random_table(std::mt19937_64& rng, int maxdeg, int maxdim) {
  std::uniform_int_distribution<int> dim(0, maxdim);
  BettiTable t;
  for (int i = 0; i <= maxdeg; ++i) t.set(i, dim(rng));
  return t;
}

TEST(SuperSymPowers, LineInDegreeZero) {
  const auto p = hhw::super_sym_powers(BettiTable{{0, 1}}, 5, 10);
  ASSERT_EQ(p.size(), 6u);
  for (const auto& t : p) EXPECT_EQ(t, (BettiTable{{0, 1}}));
}

TEST(SuperSymPowers, OddClassesAreExterior) {
  const auto p = hhw::super_sym_powers(BettiTable{{1, 2}}, 3, 10);
  EXPECT_EQ(p[2], (BettiTable{{2, 1}}));
  EXPECT_TRUE(p[3].empty());
}

TEST(SuperSymPowers, MixedParity) {
  const auto p = hhw::super_sym_powers(BettiTable{{0, 1}, {1, 1}}, 2, 10);
  EXPECT_EQ(p[2], (BettiTable{{0, 1}, {1, 1}}));
}

TEST(SuperSymPowers, ZerothPowerIsUnit) {
  std::mt19937_64 rng(1);
  EXPECT_EQ(hhw::super_sym_powers(random_table(rng, 3, 3), 2, 20)[0], hhw::unit_table());
}

TEST(SuperSymPowers, FirstPowerIsIdentity) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const BettiTable v = random_table(rng, 4, 3);
    EXPECT_EQ(hhw::super_sym_powers(v, 1, 20)[1], v);
  }
}

TEST(SuperSymPowers, MatchesMonomialEnumeration) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const BettiTable v = random_table(rng, 3, 2);
    const auto p = hhw::super_sym_powers(v, 4, 100);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(plain(p[static_cast<std::size_t>(k)]), oracle::super_sym_power(plain(v), k));
  }
}

TEST(SuperSymPowers, DegreeBoundTruncates) {
  const auto p = hhw::super_sym_powers(BettiTable{{2, 1}}, 3, 4);
  EXPECT_EQ(p[2], (BettiTable{{4, 1}}));
  EXPECT_TRUE(p[3].empty());
}

TEST(SuperSymProperty, DirectSumAdditivity) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 15; ++trial) {
    const BettiTable v = random_table(rng, 3, 2), w = random_table(rng, 3, 2);
    const auto pv = hhw::super_sym_powers(v, 4, 100);
    const auto pw = hhw::super_sym_powers(w, 4, 100);
    const auto pvw = hhw::super_sym_powers(v + w, 4, 100);
    for (int p = 0; p <= 4; ++p) {
      BettiTable sum;
      for (int a = 0; a <= p; ++a)
        sum = sum + hhw::tensor(pv[static_cast<std::size_t>(a)], pw[static_cast<std::size_t>(p - a)]);
      EXPECT_EQ(pvw[static_cast<std::size_t>(p)], sum) << "p=" << p;
    }
  }
}

TEST(SuperSymProperty, SingleOddDegreeIsBinomial) {
  for (int j : {1, 3})
    for (int m = 0; m <= 4; ++m) {
      const auto p = hhw::super_sym_powers(BettiTable{{j, m}}, 6, 100);
      for (int k = 0; k <= 6; ++k) {
        const long want = oracle::binom(m, k).get_si();
        if (want == 0)
          EXPECT_TRUE(p[static_cast<std::size_t>(k)].empty());
        else
          EXPECT_EQ(p[static_cast<std::size_t>(k)], (BettiTable{{k * j, want}}));
      }
    }
}

TEST(SuperSymProperty, SingleEvenDegreeTotalDimension) {
  for (int j : {0, 2})
    for (int m = 1; m <= 4; ++m) {
      const auto p = hhw::super_sym_powers(BettiTable{{j, m}}, 5, 100);
      for (int k = 0; k <= 5; ++k) EXPECT_EQ(p[static_cast<std::size_t>(k)].total(), oracle::binom(m + k - 1, k));
    }
}

TEST(Shift, Examples) {
  EXPECT_EQ(hhw::shift(BettiTable{{0, 1}}, 2), (BettiTable{{2, 1}}));
  EXPECT_EQ(hhw::shift(BettiTable{{0, 1}, {1, 2}, {2, 1}}, 2), (BettiTable{{2, 1}, {3, 2}, {4, 1}}));
  const BettiTable v{{0, 3}, {5, 1}};
  EXPECT_EQ(hhw::shift(v, 0), v);
}

TEST(Shift, OddOrNegativeRejected) {
  EXPECT_THROW(hhw::shift(BettiTable{{0, 1}}, 1), std::invalid_argument);
  EXPECT_THROW(hhw::shift(BettiTable{{0, 1}}, -2), std::invalid_argument);
}

TEST(Tensor, Examples) {
  const BettiTable w{{0, 2}, {3, 1}};
  EXPECT_EQ(hhw::tensor(hhw::unit_table(), w), w);
  EXPECT_EQ(hhw::tensor(BettiTable{{1, 1}}, BettiTable{{1, 1}}), (BettiTable{{2, 1}}));
  EXPECT_EQ(hhw::tensor(BettiTable{{0, 1}, {2, 1}}, BettiTable{{0, 1}, {2, 1}}), (BettiTable{{0, 1}, {2, 2}, {4, 1}}));
}

TEST(Tensor, MatchesConvolutionOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const BettiTable v = random_table(rng, 4, 3), w = random_table(rng, 4, 3);
    EXPECT_EQ(plain(hhw::tensor(v, w)), oracle::tensor(plain(v), plain(w)));
  }
}

TEST(BettiTable, ZeroEntriesAreNotStored) {
  BettiTable t{{0, 1}, {2, 0}};
  EXPECT_EQ(t.entries().size(), 1u);
  t.set(0, 0);
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(t, BettiTable{});
}

TEST(BettiTable, NegativeDimensionRejected) {
  BettiTable t;
  EXPECT_THROW(t.set(0, -1), std::invalid_argument);
}

TEST(BettiTable, ReflectAndVector) {
  const BettiTable t{{0, 1}, {1, 2}};
  EXPECT_EQ(t.reflect(4), (BettiTable{{4, 1}, {3, 2}}));
  EXPECT_EQ(BettiTable::from_vector({1, 0, 3}), (BettiTable{{0, 1}, {2, 3}}));
  EXPECT_EQ(from_plain({{0, 1}, {2, 3}}).to_vector(), (std::vector<mpz_class>{1, 0, 3}));
}

TEST(AlgebraPreset, Validation) {
  EXPECT_NO_THROW((hhw::AlgebraPreset{"ok", 2, BettiTable{{0, 1}, {2, 1}}}.validate()));
  EXPECT_THROW((hhw::AlgebraPreset{"odd", 3, BettiTable{{0, 1}}}.validate()), std::invalid_argument);
  EXPECT_THROW((hhw::AlgebraPreset{"zero", 0, BettiTable{{0, 1}}}.validate()), std::invalid_argument);
  EXPECT_THROW((hhw::AlgebraPreset{"wide", 2, BettiTable{{3, 1}}}.validate()), std::invalid_argument);
}

} // namespace
