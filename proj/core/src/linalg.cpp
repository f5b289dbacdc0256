#include "hhw/linalg.hpp"

namespace hhw {

namespace {

SparseVector<mpz_class> primitive_integer(const SparseVector<mpq_class>& v) {
  mpz_class den = 1;
  for (const auto& [k, x] : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  SparseVector<mpz_class> out;
  out.reserve(v.size());
  for (const auto& [k, x] : v)
    if (sgn(x) != 0) out.emplace_back(k, x.get_num() * (den / x.get_den()));
  return out;
}

void remove_content(SparseVector<mpz_class>& v) {
  if (v.empty()) return;
  mpz_class g = 0;
  for (const auto& [k, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (v.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [k, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// v := a v - b p, both integer vectors.
SparseVector<mpz_class> combine(const mpz_class& a, const SparseVector<mpz_class>& v,
                                const mpz_class& b, const SparseVector<mpz_class>& p) {
  SparseVector<mpz_class> out;
  out.reserve(v.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < p.size()) {
    if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
      out.emplace_back(v[i].first, a * v[i].second);
      ++i;
    } else if (i == v.size() || p[j].first < v[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      mpz_class x = a * v[i].second - b * p[j].second;
      if (x != 0) out.emplace_back(v[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

bool IntegerEchelon::insert(const SparseVector<mpq_class>& v) { return insert(primitive_integer(v)); }

bool IntegerEchelon::insert(SparseVector<mpz_class> v) {
  remove_content(v);
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) break;
    const auto& p = it->second;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), v.front().second.get_mpz_t(), p.front().second.get_mpz_t());
    const mpz_class a = p.front().second / g;
    const mpz_class b = v.front().second / g;
    v = combine(a, v, b, p);
    remove_content(v);
  }
  if (v.empty()) return false;
  const Index lead = v.front().first;
  rows_.emplace(lead, std::move(v));
  return true;
}

std::size_t exact_rank(std::span<const SparseVector<mpq_class>> columns, std::size_t nrows) {
  IntegerEchelon e;
  if (nrows < columns.size()) {
    for (const auto& row : transpose(columns, nrows)) e.insert(row);
  } else {
    for (const auto& col : columns) e.insert(col);
  }
  return e.rank();
}

} // namespace hhw
