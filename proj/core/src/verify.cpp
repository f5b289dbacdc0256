#include "hhw/verify.hpp"

#include "hhw/cherednik.hpp"
#include "hhw/errors.hpp"
#include "hhw/koszul.hpp"
#include "hhw/presets.hpp"
#include "hhw/wreath.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hhw {

namespace {

using Check = std::function<CheckResult()>;

CheckResult guarded(const std::string& name, const Check& check) {
  try {
    CheckResult r = check();
    r.name = name;
    while (!r.detail.empty() && r.detail.back() == ' ') r.detail.pop_back();
    return r;
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

std::string dims_string(const std::array<long, 3>& d) {
  return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")";
}

// Partitions of n with exactly l parts, by the recurrence p(n, l) = p(n-1, l-1) + p(n-l, l).
long partitions_with_parts(int n, int l) {
  std::vector<std::vector<long>> p(n + 1, std::vector<long>(n + 1, 0));
  p[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) p[m][k] = p[m - 1][k - 1] + p[m - k][k];
  return l <= n ? p[n][l] : 0;
}

// ---- wreath ----

SuiteReport wreath_suite(const VerifyOptions& opt) {
  SuiteReport rep{"wreath", {}};
  rep.checks.push_back(guarded("closed_forms", [] {
    const std::vector<std::pair<ClosedForm, std::string>> rows{
        {ClosedForm::PA, "weyl"},       {ClosedForm::PA_trig, "trig"},       {ClosedForm::PA_q, "qweyl"},
        {ClosedForm::PB, "z2_weyl"},    {ClosedForm::PB_trig, "z2_trig"},    {ClosedForm::PB_q, "z2_qweyl"}};
    CheckResult r{"", true, ""};
    for (const auto& [label, preset] : rows) {
      const AlgebraPreset p = load_preset(preset);
      const BiSeries c = closed_form(label, 8, 40);
      if (c != generating_series_product(p.betti, p.d, 8, 40) || c != generating_series_sum(p.betti, p.d, 8, 40)) {
        r.passed = false;
        r.detail += to_string(label) + " ";
      }
    }
    if (r.passed) r.detail = "6 labels equal up to q^8 t^40";
    return r;
  }));
  rep.checks.push_back(guarded("product_equals_partition_sum", [&] {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> dim(0, 3), dpick(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
      const int d = dpick(rng) ? 4 : 2;
      std::vector<long> betti(d + 1);
      for (auto& b : betti) b = dim(rng);
      const BettiTable t = BettiTable::from_vector(betti);
      if (generating_series_product(t, d, 6, 6 * d) != generating_series_sum(t, d, 6, 6 * d))
        return CheckResult{"", false, "mismatch at trial " + std::to_string(trial)};
    }
    return CheckResult{"", true, "50 random tables up to q^6"};
  }));
  rep.checks.push_back(guarded("partition_statistic", [] {
    const BiSeries pa = closed_form(ClosedForm::PA, 12, 24);
    for (int n = 0; n <= 12; ++n)
      for (int l = 0; l <= n; ++l)
        if (pa.at(n, 2 * (n - l)) != partitions_with_parts(n, l))
          return CheckResult{"", false, "n=" + std::to_string(n) + " l=" + std::to_string(l)};
    for (int n = 1; n <= 10; ++n) {
      BettiTable expected;
      for (int l = 1; l <= n; ++l)
        if (long c = partitions_with_parts(n, l)) expected.add(2 * (n - l), c);
      if (hilb_poincare(BettiTable{{0, 1}}, n) != expected)
        return CheckResult{"", false, "hilb_poincare n=" + std::to_string(n)};
    }
    return CheckResult{"", true, "n <= 12"};
  }));
  rep.checks.push_back(guarded("gamma_series", [] {
    const bool ok = gamma_series(1, 6, 12) == closed_form(ClosedForm::PA, 6, 12) &&
                    gamma_series(2, 6, 12) == closed_form(ClosedForm::PB, 6, 12) &&
                    gamma_series(3, 6, 12) == generating_series_product(BettiTable{{0, 1}, {2, 2}}, 2, 6, 12);
    return CheckResult{"", ok, "nu = 1, 2, 3"};
  }));
  rep.checks.push_back(guarded("deformation_counts", [] {
    std::ostringstream os;
    bool ok = true;
    for (const auto& name : builtin_preset_names()) {
      const AlgebraPreset p = load_preset(name);
      const long c = deformation_parameter_count(p.betti, p.d, 2);
      ok = ok && c == deformation_parameter_formula(p.betti, p.d);
      os << name << "=" << c << " ";
    }
    const long d4 = deformation_parameter_count(BettiTable{{0, 1}}, 4, 2);
    ok = ok && d4 == 0 && deformation_parameter_count(BettiTable{{0, 1}}, 2, 2) == 1;
    os << "d4=" << d4;
    return CheckResult{"", ok, os.str()};
  }));
  rep.checks.push_back(guarded("duality", [] {
    for (const auto& name : builtin_preset_names()) {
      const AlgebraPreset p = load_preset(name);
      const BettiTable hom = p.betti.reflect(p.d);
      for (int n = 1; n <= 4; ++n)
        if (hh_cohomology_wreath(p.betti, p.d, n).reflect(n * p.d) != hh_homology_wreath(hom, n))
          return CheckResult{"", false, name + " n=" + std::to_string(n)};
    }
    return CheckResult{"", true, "all presets, n <= 4"};
  }));
  return rep;
}

// ---- brute force ----

SuiteReport bruteforce_suite(const VerifyOptions& opt) {
  SuiteReport rep{"bruteforce", {}};
  const FiniteDimAlgebra dual = truncated_polynomial(2);
  const FiniteDimAlgebra z2 = cyclic_group_algebra(2);
  for (const auto* a : {&dual, &z2})
    for (int n : {2, 3}) {
      const int levels = n == 2 ? 3 : 2;
      rep.checks.push_back(guarded("homolog_i " + a->name() + " n=" + std::to_string(n), [&] {
        const DimReport r = verify_homolog_i(*a, regular_bimodule(*a), n, levels, opt.size_cap);
        return CheckResult{"", r.passed, r.describe()};
      }));
    }
  rep.checks.push_back(guarded("size_cap", [&] {
    try {
      verify_homolog_i(z2, regular_bimodule(z2), 3, 3, opt.size_cap);
    } catch (const ResourceError&) {
      return CheckResult{"", true, "n=3 level 3 refused"};
    }
    return CheckResult{"", opt.size_cap > kDefaultSizeCap, "n=3 level 3 ran under a raised cap"};
  }));
  for (int n : {2, 3})
    rep.checks.push_back(guarded("homotopy n=" + std::to_string(n), [&] {
      int trials = 0, failures = 0;
      for (int m = 1; m <= 4; ++m) {
        const HomotopyReport r = homotopy_identity_check(z2, n, m, 50, opt.seed + m, opt.size_cap);
        trials += r.trials;
        failures += r.failures;
      }
      return CheckResult{"", failures == 0,
                         std::to_string(trials) + " cycles, " + std::to_string(failures) + " failures"};
    }));
  rep.checks.push_back(guarded("afls Q[x]/(x^3) with x -> -x", [&] {
    const FiniteDimAlgebra b =
        truncated_polynomial(3).with_action({QMatrix::identity(3), QMatrix::diagonal({1, -1, 1})});
    const DimReport r = afls_check(b, 2, opt.size_cap);
    return CheckResult{"", r.passed, r.describe()};
  }));
  rep.checks.push_back(guarded("afls Q[Z2]^(x)2 with swap", [&] {
    const FiniteDimAlgebra b = tensor_power(z2, 2).with_action(symmetric_group_action(z2, 2));
    const DimReport r = afls_check(b, 2, opt.size_cap);
    return CheckResult{"", r.passed, r.describe()};
  }));
  return rep;
}

// ---- koszul ----

SuiteReport koszul_suite(const VerifyOptions&) {
  SuiteReport rep{"koszul", {}};
  const std::vector<std::pair<RankOneKind, std::pair<CohomologyDims, CohomologyDims>>> expected{
      {RankOneKind::weyl, {{1, 0, 0}, {1, 0, 1}}},
      {RankOneKind::trig, {{1, 1, 0}, {1, 0, 2}}},
      {RankOneKind::qweyl, {{1, 2, 1}, {1, 0, 5}}}};
  for (const auto& [kind, dims] : expected) {
    const std::string k = to_string(kind);
    rep.checks.push_back(guarded(k + " d^2=0", [&] {
      for (Twist tw : {Twist::id, Twist::eps}) {
        const CochainComplex cx = build_cochain_complex(kind, tw, 10);
        for (const auto& col : cx.d1d0)
          if (!col.empty()) return CheckResult{"", false, "nonzero composite"};
      }
      return CheckResult{"", true, "window 10, both twists"};
    }));
    rep.checks.push_back(guarded(k + " duality", [&] {
      const DualityReport r = duality_check(kind, 6);
      return CheckResult{"", r.passed, std::to_string(r.checked) + " comparisons " + r.detail};
    }));
    rep.checks.push_back(guarded(k + " HH^*", [&] {
      std::string detail;
      bool ok = true;
      for (int n : {8, 10, 12}) {
        const CohomologyDims d = hh_cohomology_rank_one(kind, Twist::id, n);
        ok = ok && d == dims.first;
        detail += "N=" + std::to_string(n) + " " + dims_string(d) + " ";
      }
      return CheckResult{"", ok, detail};
    }));
    rep.checks.push_back(guarded(k + " Z2 crossed product", [&] {
      const CohomologyDims d = crossed_z2_cohomology(kind, 10);
      return CheckResult{"", d == dims.second, dims_string(d)};
    }));
  }
  return rep;
}

// ---- cherednik ----

CherednikElement random_element(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 3), coef(-3, 3), kind(0, 2), slot(0, 2 * n - 1), deg(0, 2);
  const auto perms = all_perms(n);
  std::uniform_int_distribution<std::size_t> perm(0, perms.size() - 1);
  CherednikElement a(n);
  for (int t = terms(rng); t > 0; --t) {
    NormalMonomial m{std::vector<int>(n, 0), perms[perm(rng)], std::vector<int>(n, 0)};
    for (int d = deg(rng); d > 0; --d) {
      const int s = slot(rng);
      if (s < n) ++m.xexp[s];
      else ++m.pexp[s - n];
    }
    int c = coef(rng);
    if (c == 0) c = 1;
    const int kk = kind(rng);
    QPoly p = kk == 0 ? QPoly(mpq_class(c)) : kk == 1 ? QPoly::monomial(1, c) : QPoly({mpq_class(c), mpq_class(1)});
    a.add_term(m, p);
  }
  return a;
}

SuiteReport cherednik_suite(const VerifyOptions& opt) {
  SuiteReport rep{"cherednik", {}};
  rep.checks.push_back(guarded("relations", [] {
    const bool ok = normal_order(parse_word("p1 x1", 2), 2).to_string() == "x1 p1 - 1 + k s12" &&
                    normal_order(parse_word("p2 x1", 2), 2).to_string() == "x1 p2 - k s12" &&
                    normal_order(parse_word("s12 x1 s12", 2), 2).to_string() == "x2";
    return CheckResult{"", ok, "p1 x1, p2 x1, s12 x1 s12"};
  }));
  for (const auto& [n, len] : {std::pair{2, 4}, std::pair{3, 3}})
    rep.checks.push_back(guarded("confluence n=" + std::to_string(n), [n = n, len = len] {
      const ConfluenceReport r = confluence_check(n, len);
      return CheckResult{"", r.passed,
                         std::to_string(r.words_checked) + " words" + (r.counterexample ? ": " + *r.counterexample : "")};
    }));
  for (int n : {2, 3})
    rep.checks.push_back(guarded("pbw n=" + std::to_string(n), [n] {
      std::string detail;
      bool ok = true;
      for (int d = 0; d <= 3; ++d) {
        const PbwReport r = pbw_dimension_check(n, d);
        ok = ok && r.passed;
        detail += std::to_string(r.rank) + "/" + std::to_string(r.expected) + " ";
      }
      return CheckResult{"", ok, detail};
    }));
  for (int n : {2, 3})
    rep.checks.push_back(guarded("associativity n=" + std::to_string(n), [&opt, n] {
      std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(n));
      for (int t = 0; t < 100; ++t) {
        const auto a = random_element(n, rng), b = random_element(n, rng), c = random_element(n, rng);
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
          return CheckResult{"", false, "trial " + std::to_string(t)};
      }
      return CheckResult{"", true, "100 random triples"};
    }));
  for (int n : {2, 3})
    rep.checks.push_back(guarded("symmetrizer n=" + std::to_string(n), [n] {
      const CherednikElement e = symmetrizer(n);
      bool ok = multiply(e, e) == e;
      for (const Perm& s : all_perms(n)) {
        const CherednikElement g = CherednikElement::monomial({std::vector<int>(n, 0), s, std::vector<int>(n, 0)});
        ok = ok && multiply(e, g) == e && multiply(g, e) == e;
      }
      return CheckResult{"", ok, "e^2 = e, e s = s e = e"};
    }));
  for (const auto& [n, len] : {std::pair{2, 4}, std::pair{3, 3}})
    rep.checks.push_back(guarded("k=0 specialization n=" + std::to_string(n), [n = n, len = len] {
      std::size_t words = 0;
      std::vector<Letter> alphabet;
      for (int i = 0; i < n; ++i) alphabet.push_back(x_letter(i));
      for (int i = 0; i < n; ++i) alphabet.push_back(p_letter(i));
      for (const Perm& s : all_perms(n))
        if (!is_identity(s)) alphabet.push_back(perm_letter(s));
      std::vector<Word> frontier{Word{}};
      for (int l = 0; l <= len; ++l) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
          ++words;
          if (specialize_k0(normal_order(w, n)) != crossed_product_normal_form(w, n))
            return CheckResult{"", false, "word " + to_string(w)};
          if (l < len)
            for (const Letter& x : alphabet) {
              next.push_back(w);
              next.back().push_back(x);
            }
        }
        frontier = std::move(next);
      }
      return CheckResult{"", true, std::to_string(words) + " words"};
    }));
  return rep;
}

} // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<std::string> suite_names() { return {"wreath", "bruteforce", "koszul", "cherednik"}; }

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  if (name == "wreath") return wreath_suite(options);
  if (name == "bruteforce") return bruteforce_suite(options);
  if (name == "koszul") return koszul_suite(options);
  if (name == "cherednik") return cherednik_suite(options);
  throw std::invalid_argument("unknown verification suite: " + std::string(name));
}

} // namespace hhw
