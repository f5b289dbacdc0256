#include "hhw/cherednik.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using hhw::CherednikElement;
using hhw::Word;

CherednikElement reduce(const std::string& w, int n) { return hhw::normal_order(hhw::parse_word(w, n), n); }

Word random_word(std::mt19937_64& rng, int n, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen), kind(0, 2), idx(0, n - 1);
  const auto perms = hhw::all_perms(n);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  Word w;
  for (int l = len(rng); l > 0; --l) {
    const int k = kind(rng);
    w.push_back(k == 0 ? hhw::x_letter(idx(rng)) : k == 1 ? hhw::p_letter(idx(rng)) : hhw::perm_letter(perms[pick(rng)]));
  }
  return w;
}

int xp_length(const Word& w) {
  int l = 0;
  for (const auto& letter : w) l += letter.kind != hhw::Letter::Kind::perm;
  return l;
}

hhw::QMultiPoly random_poly(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> e(0, 3), c(-3, 3);
  hhw::QMultiPoly f;
  for (int t = 0; t < 4; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n));
    for (auto& x : exps) x = e(rng);
    f[exps] += c(rng);
  }
  for (auto it = f.begin(); it != f.end();) it = sgn(it->second) == 0 ? f.erase(it) : std::next(it);
  return f;
}

hhw::QMultiPoly dunkl_of(const CherednikElement& e, const mpq_class& k, const hhw::QMultiPoly& f) {
  hhw::QMultiPoly out;
  for (const auto& [m, c] : e.terms()) {
    const mpq_class ck = c.eval(k);
    for (const auto& [exps, v] : hhw::dunkl_apply(m, k, f)) out[exps] += ck * v;
  }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

TEST(Permutations, GroupLaws) {
  for (int n = 1; n <= 4; ++n) {
    const auto perms = hhw::all_perms(n);
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    EXPECT_EQ(static_cast<long>(perms.size()), fact);
    for (const auto& s : perms) EXPECT_TRUE(hhw::is_identity(hhw::compose(s, hhw::inverse(s))));
  }
  EXPECT_THROW(hhw::transposition(2, 0, 0), std::invalid_argument);
}

TEST(NormalOrder, DefiningRelations) {
  EXPECT_EQ(reduce("p1 x1", 2).to_string(), "x1 p1 - 1 + k s12");
  EXPECT_EQ(reduce("p2 x1", 2).to_string(), "x1 p2 - k s12");
  EXPECT_EQ(reduce("s12 x1 s12", 2).to_string(), "x2");
  EXPECT_EQ(reduce("p1 p2 x1", 2).to_string(), "x1 p1 p2 - p2");
}

TEST(NormalOrder, ThreeStrandCommutator) {
  // [x1, p1] = 1 - k (s12 + s13) for n = 3.
  const auto lhs = reduce("x1 p1", 3) - reduce("p1 x1", 3);
  const auto rhs = CherednikElement::one(3) - hhw::QPoly::monomial(1) * (reduce("s12", 3) + reduce("s13", 3));
  EXPECT_EQ(lhs, rhs);
}

TEST(NormalOrder, StrategiesAgree) {
  std::mt19937_64 rng(1);
  for (int n : {2, 3})
    for (int t = 0; t < 100; ++t) {
      const Word w = random_word(rng, n, 5);
      EXPECT_EQ(hhw::normal_order(w, n, hhw::Strategy::leftmost), hhw::normal_order(w, n, hhw::Strategy::rightmost))
          << hhw::to_string(w);
    }
}

TEST(NormalOrder, InvalidInputRejected) {
  EXPECT_THROW(hhw::parse_word("x3", 2), std::invalid_argument);
  EXPECT_THROW(hhw::parse_word("s11", 2), std::invalid_argument);
  EXPECT_THROW(hhw::parse_word("y1", 2), std::invalid_argument);
  EXPECT_THROW(hhw::normal_order({hhw::x_letter(0)}, 1), std::invalid_argument);
  EXPECT_THROW(hhw::normal_order({hhw::x_letter(2)}, 2), std::invalid_argument);
}

TEST(NormalOrder, WordRoundTrip) {
  for (const char* w : {"x1 p2 s12", "g312 x3", "1"}) {
    const Word parsed = hhw::parse_word(w, 3);
    EXPECT_EQ(hhw::parse_word(hhw::to_string(parsed), 3), parsed) << w;
  }
}

TEST(Multiply, Examples) {
  const auto x1 = reduce("x1", 2), p1 = reduce("p1", 2);
  EXPECT_EQ(hhw::multiply(x1, CherednikElement::one(2)), x1);
  EXPECT_EQ(hhw::multiply(x1, p1).to_string(), "x1 p1");
  EXPECT_EQ(hhw::multiply(p1, x1).to_string(), "x1 p1 - 1 + k s12");
  EXPECT_THROW(hhw::multiply(x1, reduce("x1", 3)), std::invalid_argument);
}

TEST(Multiply, Associative) {
  std::mt19937_64 rng(2);
  for (int n : {2, 3})
    for (int t = 0; t < 50; ++t) {
      const auto a = hhw::normal_order(random_word(rng, n, 2), n);
      const auto b = hhw::normal_order(random_word(rng, n, 2), n);
      const auto c = hhw::normal_order(random_word(rng, n, 2), n);
      EXPECT_EQ(hhw::multiply(hhw::multiply(a, b), c), hhw::multiply(a, hhw::multiply(b, c)));
    }
}

TEST(Confluence, SmallExhaustive) {
  const auto r = hhw::confluence_check(2, 2);
  EXPECT_TRUE(r.passed);
  EXPECT_GT(r.words_checked, 0u);
  EXPECT_FALSE(r.counterexample.has_value());
  EXPECT_TRUE(hhw::confluence_check(3, 2).passed);
}

TEST(Pbw, Counts) {
  const auto r0 = hhw::pbw_dimension_check(2, 0);
  EXPECT_EQ(r0.expected, 2u);
  EXPECT_TRUE(r0.passed);
  const auto r2 = hhw::pbw_dimension_check(2, 2);
  EXPECT_EQ(r2.expected, 30u);
  EXPECT_EQ(r2.counted, 30u);
  EXPECT_TRUE(r2.passed);
  const auto r31 = hhw::pbw_dimension_check(3, 1);
  EXPECT_EQ(r31.expected, 42u);
  EXPECT_EQ(r31.rank, 42u);
  EXPECT_TRUE(r31.filtration_ok);
}

TEST(Filtration, TopDegreeIndependentOfK) {
  std::mt19937_64 rng(3);
  for (int n : {2, 3})
    for (int t = 0; t < 100; ++t) {
      const Word w = random_word(rng, n, 5);
      const int len = xp_length(w);
      const auto e = hhw::normal_order(w, n);
      for (const auto& [m, c] : e.terms()) {
        EXPECT_LE(m.degree(), len) << hhw::to_string(w);
        if (m.degree() == len) {
          EXPECT_LE(c.degree(), 0) << hhw::to_string(w);
        }
      }
    }
}

TEST(Specialization, KZeroMatchesCrossedProduct) {
  std::mt19937_64 rng(4);
  for (int n : {2, 3})
    for (int t = 0; t < 100; ++t) {
      const Word w = random_word(rng, n, 5);
      EXPECT_EQ(hhw::specialize_k0(hhw::normal_order(w, n)), hhw::crossed_product_normal_form(w, n))
          << hhw::to_string(w);
    }
}

TEST(Dunkl, NormalFormsActLikeWords) {
  std::mt19937_64 rng(5);
  for (const mpq_class& k : {mpq_class(0), mpq_class(1, 3), mpq_class(-2)})
    for (int n : {2, 3})
      for (int t = 0; t < 20; ++t) {
        const Word w = random_word(rng, n, 4);
        const auto f = random_poly(rng, n);
        EXPECT_EQ(dunkl_of(hhw::normal_order(w, n), k, f), hhw::dunkl_apply(w, k, f)) << hhw::to_string(w);
      }
}

TEST(Spherical, Idempotent) {
  for (int n : {2, 3}) {
    const auto e = hhw::symmetrizer(n);
    EXPECT_EQ(hhw::multiply(e, e), e);
    for (const auto& s : hhw::all_perms(n)) {
      const auto sigma = hhw::normal_order({hhw::perm_letter(s)}, n);
      EXPECT_EQ(hhw::multiply(e, sigma), e);
      EXPECT_EQ(hhw::multiply(sigma, e), e);
    }
    EXPECT_EQ(hhw::spherical_product(CherednikElement::one(n)), e);
  }
}

TEST(Spherical, Examples) {
  const auto e = hhw::symmetrizer(2);
  EXPECT_EQ(hhw::spherical_product(reduce("s12", 2)), e);
  const auto a = hhw::spherical_product(reduce("x1 p1", 2));
  const auto s = reduce("s12", 2);
  EXPECT_EQ(hhw::multiply(s, a), a);
  EXPECT_EQ(hhw::multiply(a, s), a);
  EXPECT_EQ(hhw::multiply(e, hhw::multiply(a, e)), a);
}

} // namespace
