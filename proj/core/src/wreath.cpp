#include "hhw/wreath.hpp"

#include <limits>
#include <map>
#include <stdexcept>

namespace hhw {

namespace {

void require_even_d(int d) {
  if (d <= 0 || d % 2 != 0) throw std::invalid_argument("d must be even and positive");
}

void require_support(const BettiTable& t, int lo, int hi, const char* what) {
  if (t.empty()) return;
  if (t.min_degree() < lo || t.max_degree() > hi)
    throw std::invalid_argument(std::string(what) + ": Betti support outside [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// sum_{lambda |- n} tensor_i S^{p_i(lambda)} V_i, where V_i is supplied by
// `part_space(i)` for each part size i.
template <class PartSpace>
BettiTable partition_sum(int n, PartSpace part_space) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  // powers[i][p] = S^p V_i, for p <= n / i.
  std::map<int, std::vector<BettiTable>> powers;
  for (int i = 1; i <= n; ++i) {
    const BettiTable v = part_space(i);
    const int pmax = n / i;
    const int bound = v.empty() ? 0 : pmax * v.max_degree();
    powers.emplace(i, super_sym_powers(v, pmax, bound));
  }

  BettiTable total;
  for (const Partition& lambda : enumerate_partitions(n)) {
    BettiTable term = unit_table();
    for (const auto& [i, table] : powers) {
      const int p = lambda.multiplicity(i);
      if (p > 0) term = tensor(term, table[static_cast<std::size_t>(p)]);
    }
    total = total + term;
  }
  return total;
}

} // namespace

BettiTable hh_homology_wreath(const BettiTable& hom, int n) {
  require_support(hom, 0, std::numeric_limits<int>::max(), "hh_homology_wreath");
  return partition_sum(n, [&](int) { return hom; });
}

BettiTable hh_cohomology_wreath(const BettiTable& coh, int d, int n) {
  require_even_d(d);
  require_support(coh, 0, d, "hh_cohomology_wreath");
  return partition_sum(n, [&](int i) { return shift(coh, d * (i - 1)); });
}

BiSeries generating_series_product(const BettiTable& coh, int d, int qb, int tb) {
  require_even_d(d);
  require_support(coh, 0, d, "generating_series_product");
  BiSeries s = BiSeries::one(qb, tb);
  for (int m = 1; m <= qb; ++m) {
    for (const auto& [k, bk] : coh.entries()) {
      const int texp = k + d * (m - 1);
      if (texp > tb) continue;
      const int b = static_cast<int>(bk.get_si());
      if (k % 2 == 0)
        s = apply_factor(s, -1, m, texp, -b);
      else
        s = apply_factor(s, +1, m, texp, b);
    }
  }
  return s;
}

BiSeries generating_series_sum(const BettiTable& coh, int d, int qb, int tb) {
  require_even_d(d);
  require_support(coh, 0, d, "generating_series_sum");
  BiSeries s(qb, tb);
  for (int n = 0; n <= qb; ++n) {
    const BettiTable table = hh_cohomology_wreath(coh, d, n);
    for (const auto& [i, dim] : table.entries())
      if (i <= tb) s.set(n, i, dim);
  }
  return s;
}

ClosedForm parse_closed_form(std::string_view label) {
  if (label == "PA") return ClosedForm::PA;
  if (label == "PA_trig") return ClosedForm::PA_trig;
  if (label == "PA_q") return ClosedForm::PA_q;
  if (label == "PB") return ClosedForm::PB;
  if (label == "PB_trig") return ClosedForm::PB_trig;
  if (label == "PB_q") return ClosedForm::PB_q;
  throw std::invalid_argument("unknown closed-form label '" + std::string(label) + "'");
}

std::string to_string(ClosedForm label) {
  switch (label) {
  case ClosedForm::PA: return "PA";
  case ClosedForm::PA_trig: return "PA_trig";
  case ClosedForm::PA_q: return "PA_q";
  case ClosedForm::PB: return "PB";
  case ClosedForm::PB_trig: return "PB_trig";
  case ClosedForm::PB_q: return "PB_q";
  }
  throw std::invalid_argument("unknown closed-form label");
}

BiSeries closed_form(ClosedForm label, int qb, int tb) {
  BiSeries s = BiSeries::one(qb, tb);
  for (int m = 1; m <= qb; ++m) {
    // Common factor (1 - q^m t^{2(m-1)})^{-1}.
    s = apply_factor(s, -1, m, 2 * (m - 1), -1);
    switch (label) {
    case ClosedForm::PA:
      break;
    case ClosedForm::PA_trig:
      s = apply_factor(s, +1, m, 2 * m - 1, 1);
      break;
    case ClosedForm::PA_q:
      s = apply_factor(s, -1, m, 2 * m, -1);
      s = apply_factor(s, +1, m, 2 * m - 1, 2);
      break;
    case ClosedForm::PB:
      s = apply_factor(s, -1, m, 2 * m, -1);
      break;
    case ClosedForm::PB_trig:
      s = apply_factor(s, -1, m, 2 * m, -2);
      break;
    case ClosedForm::PB_q:
      s = apply_factor(s, -1, m, 2 * m, -5);
      break;
    }
  }
  return s;
}

BiSeries gamma_series(int nu, int qb, int tb) {
  if (nu < 1) throw std::invalid_argument("gamma_series: nu must be >= 1");
  BiSeries s = BiSeries::one(qb, tb);
  for (int m = 1; m <= qb; ++m) {
    s = apply_factor(s, -1, m, 2 * (m - 1), -1);
    s = apply_factor(s, -1, m, 2 * m, 1 - nu);
  }
  return s;
}

BettiTable hilb_poincare(const BettiTable& surface_coh, int n) {
  require_support(surface_coh, 0, 2, "hilb_poincare");
  return hh_cohomology_wreath(surface_coh, 2, n);
}

long deformation_parameter_count(const BettiTable& coh, int d, int n) {
  if (coh[0] != 1)
    throw std::invalid_argument("deformation_parameter_count: requires HH^0(A) to be one-dimensional");
  if (n < 2) throw std::invalid_argument("deformation_parameter_count: requires n >= 2");
  return hh_cohomology_wreath(coh, d, n)[2].get_si();
}

long deformation_parameter_formula(const BettiTable& coh, int d) {
  require_even_d(d);
  const long b1 = coh[1].get_si();
  const long b2 = coh[2].get_si();
  return b2 + b1 * (b1 - 1) / 2 + (d == 2 ? 1 : 0);
}

} // namespace hhw
