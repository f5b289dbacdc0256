#include "oracles.hpp"

#include "hhw/hochschild.hpp"
#include "hhw/presets.hpp"
#include "hhw/wreath.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using hhw::BettiTable;

std::map<int, long> plain(const BettiTable& t) {
  std::map<int, long> out;
  for (const auto& [deg, dim] : t.entries()) out[deg] = dim.get_si();
  return out;
}

BettiTable poly_t(const hhw::BiSeries& s, int n) {
  BettiTable t;
  const auto c = s.q_coefficient(n);
  for (std::size_t i = 0; i < c.size(); ++i) t.set(static_cast<int>(i), c[i]);
  return t;
}

TEST(HomologyWreath, Examples) {
  EXPECT_EQ(hhw::hh_homology_wreath(BettiTable{{0, 1}}, 3), (BettiTable{{0, 3}}));
  const BettiTable hom{{0, 2}, {1, 1}, {2, 1}};
  EXPECT_EQ(hhw::hh_homology_wreath(hom, 1), hom);
  EXPECT_EQ(hhw::hh_homology_wreath(hom, 0), hhw::unit_table());
}

TEST(HomologyWreath, EmptyTableGivesEmptyForPositiveN) {
  EXPECT_TRUE(hhw::hh_homology_wreath(BettiTable{}, 2).empty());
  EXPECT_EQ(hhw::hh_homology_wreath(BettiTable{}, 0), hhw::unit_table());
}

TEST(CohomologyWreath, Examples) {
  EXPECT_EQ(hhw::hh_cohomology_wreath(BettiTable{{0, 1}}, 2, 2), (BettiTable{{0, 1}, {2, 1}}));
  EXPECT_EQ(hhw::hh_cohomology_wreath(BettiTable{{0, 1}, {2, 1}}, 2, 2), (BettiTable{{0, 1}, {2, 2}, {4, 2}}));
  EXPECT_EQ(hhw::hh_cohomology_wreath(BettiTable{{0, 1}, {1, 2}, {2, 1}}, 2, 2),
            (BettiTable{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}}));
}

TEST(CohomologyWreath, MatchesPartitionSumOracle) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> dim(0, 2);
  for (int trial = 0; trial < 10; ++trial)
    for (int d : {2, 4}) {
      std::vector<long> b(static_cast<std::size_t>(d + 1));
      for (auto& x : b) x = dim(rng);
      const BettiTable t = BettiTable::from_vector(b);
      for (int n = 0; n <= 4; ++n)
        EXPECT_EQ(plain(hhw::hh_cohomology_wreath(t, d, n)), oracle::wreath_table(plain(t), n, d)) << n;
    }
}

TEST(CohomologyWreath, SupportedInZeroToND) {
  for (const auto& name : hhw::builtin_preset_names()) {
    const auto p = hhw::load_preset(name);
    for (int n = 1; n <= 5; ++n) {
      const BettiTable t = hhw::hh_cohomology_wreath(p.betti, p.d, n);
      EXPECT_GE(t.min_degree(), 0);
      EXPECT_LE(t.max_degree(), n * p.d);
    }
  }
}

TEST(CohomologyWreath, InvalidInputRejected) {
  EXPECT_THROW(hhw::hh_cohomology_wreath(BettiTable{{0, 1}}, 3, 2), std::invalid_argument);
  EXPECT_THROW(hhw::hh_cohomology_wreath(BettiTable{{3, 1}}, 2, 2), std::invalid_argument);
  EXPECT_THROW(hhw::hh_cohomology_wreath(BettiTable{{0, 1}}, 2, -1), std::invalid_argument);
}

TEST(WreathProperty, VanDenBerghDuality) {
  for (const auto& name : hhw::builtin_preset_names()) {
    const auto p = hhw::load_preset(name);
    const BettiTable hom = p.betti.reflect(p.d);
    for (int n = 0; n <= 4; ++n)
      EXPECT_EQ(hhw::hh_cohomology_wreath(p.betti, p.d, n).reflect(n * p.d), hhw::hh_homology_wreath(hom, n))
          << name << " n=" << n;
  }
}

TEST(GeneratingSeries, WeylQCubedCoefficient) {
  const auto s = hhw::generating_series_product(BettiTable{{0, 1}}, 2, 3, 6);
  EXPECT_EQ(poly_t(s, 3), (BettiTable{{0, 1}, {2, 1}, {4, 1}}));
  EXPECT_EQ(poly_t(hhw::generating_series_sum(BettiTable{{0, 1}}, 2, 3, 6), 3), (BettiTable{{0, 1}, {2, 1}, {4, 1}}));
}

TEST(GeneratingSeries, QWeylQSquaredCoefficient) {
  const auto s = hhw::generating_series_product(BettiTable{{0, 1}, {1, 2}, {2, 1}}, 2, 2, 8);
  EXPECT_EQ(poly_t(s, 2), (BettiTable{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}}));
}

TEST(GeneratingSeries, TrigMatchesClosedForm) {
  EXPECT_EQ(hhw::generating_series_product(BettiTable{{0, 1}, {1, 1}}, 2, 6, 14),
            hhw::closed_form(hhw::ClosedForm::PA_trig, 6, 14));
}

TEST(GeneratingSeries, LowOrderCoefficients) {
  const BettiTable coh{{0, 1}, {1, 3}, {2, 2}};
  const auto s = hhw::generating_series_sum(coh, 2, 4, 10);
  EXPECT_EQ(poly_t(s, 0), hhw::unit_table());
  EXPECT_EQ(poly_t(s, 1), coh);
}

TEST(GeneratingSeries, ProductEqualsSumForPresets) {
  for (const auto& name : hhw::builtin_preset_names()) {
    const auto p = hhw::load_preset(name);
    EXPECT_EQ(hhw::generating_series_product(p.betti, p.d, 6, 14), hhw::generating_series_sum(p.betti, p.d, 6, 14))
        << name;
  }
}

TEST(GeneratingSeries, MatchesBinomialOracle) {
  const std::vector<long> b{1, 2, 0, 1, 3};
  const auto s = hhw::generating_series_product(BettiTable::from_vector(b), 4, 5, 24);
  const auto expected = oracle::expand_product(oracle::goettsche_factors(b, 4, 5), 5, 24);
  for (int n = 0; n <= 5; ++n)
    for (int i = 0; i <= 24; ++i) {
      auto it = expected.find({n, i});
      EXPECT_EQ(s.at(n, i), it == expected.end() ? mpz_class(0) : it->second) << n << "," << i;
    }
}

TEST(GeneratingSeries, CoefficientsNonnegative) {
  for (const auto& name : hhw::builtin_preset_names()) {
    const auto p = hhw::load_preset(name);
    const auto s = hhw::generating_series_product(p.betti, p.d, 7, 16);
    for (int n = 0; n <= 7; ++n)
      for (int i = 0; i <= 16; ++i) EXPECT_GE(s.at(n, i), 0) << name;
  }
}

TEST(ClosedForm, LabelsRoundTrip) {
  for (const char* label : {"PA", "PA_trig", "PA_q", "PB", "PB_trig", "PB_q"})
    EXPECT_EQ(hhw::to_string(hhw::parse_closed_form(label)), label);
  EXPECT_THROW(hhw::parse_closed_form("PD"), std::invalid_argument);
}

TEST(ClosedForm, TypeAWeylIsPartitionGeneratingFunctionAtTEqualsOne) {
  const auto s = hhw::closed_form(hhw::ClosedForm::PA, 10, 20);
  const auto counts = oracle::partition_counts(10);
  for (int n = 0; n <= 10; ++n) {
    mpz_class total = 0;
    for (int i = 0; i <= 20; ++i) total += s.at(n, i);
    EXPECT_EQ(total, counts[static_cast<std::size_t>(n)]);
  }
}

TEST(GammaSeries, Examples) {
  EXPECT_EQ(hhw::gamma_series(1, 6, 14), hhw::closed_form(hhw::ClosedForm::PA, 6, 14));
  EXPECT_EQ(hhw::gamma_series(2, 6, 14), hhw::closed_form(hhw::ClosedForm::PB, 6, 14));
  EXPECT_EQ(hhw::gamma_series(3, 6, 14), hhw::generating_series_product(BettiTable{{0, 1}, {2, 2}}, 2, 6, 14));
  EXPECT_THROW(hhw::gamma_series(0, 3, 3), std::invalid_argument);
}

TEST(HilbPoincare, Examples) {
  EXPECT_EQ(hhw::hilb_poincare(BettiTable{{0, 1}}, 3), (BettiTable{{0, 1}, {2, 1}, {4, 1}}));
  EXPECT_EQ(hhw::hilb_poincare(BettiTable{{0, 1}}, 1), hhw::unit_table());
  EXPECT_EQ(hhw::hilb_poincare(BettiTable{{0, 1}, {2, 1}}, 2), (BettiTable{{0, 1}, {2, 2}, {4, 2}}));
  EXPECT_THROW(hhw::hilb_poincare(BettiTable{{3, 1}}, 2), std::invalid_argument);
}

TEST(HilbPoincare, K3TypeTableMatchesPartitionSum) {
  const BettiTable k3{{0, 1}, {2, 22}};
  const auto t = hhw::hilb_poincare(k3, 2);
  EXPECT_EQ(plain(t), oracle::wreath_table(plain(k3), 2, 2));
  EXPECT_EQ(t[2], 23);
}

TEST(Deformation, Examples) {
  EXPECT_EQ(hhw::deformation_parameter_count(hhw::load_preset("weyl").betti, 2, 2), 1);
  EXPECT_EQ(hhw::deformation_parameter_count(hhw::load_preset("weyl").betti, 2, 5), 1);
  EXPECT_EQ(hhw::deformation_parameter_count(hhw::load_preset("qweyl").betti, 2, 2), 3);
  EXPECT_EQ(hhw::deformation_parameter_count(BettiTable{{0, 1}}, 4, 2), 0);
}

TEST(Deformation, CountMatchesFormula) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> dim(0, 3);
  for (int trial = 0; trial < 30; ++trial)
    for (int d : {2, 4, 6}) {
      std::vector<long> b(static_cast<std::size_t>(d + 1));
      for (auto& x : b) x = dim(rng);
      b[0] = 1;
      const BettiTable t = BettiTable::from_vector(b);
      const long b1 = b[1], b2 = b[2];
      const long want = d == 2 ? b2 + b1 * (b1 - 1) / 2 + 1 : b2 + b1 * (b1 - 1) / 2;
      EXPECT_EQ(hhw::deformation_parameter_count(t, d, 2), want);
      EXPECT_EQ(hhw::deformation_parameter_count(t, d, 3), want);
    }
}

TEST(Deformation, OutsideHypothesesRejected) {
  EXPECT_THROW(hhw::deformation_parameter_count(BettiTable{{0, 2}}, 2, 2), std::invalid_argument);
  EXPECT_THROW(hhw::deformation_parameter_count(BettiTable{{0, 1}}, 2, 1), std::invalid_argument);
}

TEST(WreathIntegration, SymmetricSquareOfDualNumbersByBruteForce) {
  // HH_* of Q[S_2] x| (Q[x]/(x^2))^{(x)2} from its bar complex, against the
  // partition sum fed with HH_*(Q[x]/(x^2)) = (2, 1, 1, ...).
  const auto a = hhw::truncated_polynomial(2);
  const auto b = hhw::tensor_power(a, 2).with_action(hhw::symmetric_group_action(a, 2));
  const auto cp = hhw::crossed_product(b);
  const auto brute = hhw::hh_dims(cp, hhw::regular_bimodule(cp), 2);
  EXPECT_EQ(brute, (std::vector<long>{5, 3, 3}));
  const BettiTable expected = hhw::hh_homology_wreath(BettiTable{{0, 2}, {1, 1}, {2, 1}}, 2);
  for (int i = 0; i <= 2; ++i) EXPECT_EQ(expected[i], brute[static_cast<std::size_t>(i)]) << i;
}

} // namespace
