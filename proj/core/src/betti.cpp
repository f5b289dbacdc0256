#include "hhw/betti.hpp"

#include "hhw/series.hpp"

#include <stdexcept>

namespace hhw {

namespace {
const mpz_class kZero = 0;
}

BettiTable::BettiTable(std::initializer_list<std::pair<const int, long>> dims) {
  for (const auto& [deg, dim] : dims) set(deg, dim);
}

BettiTable::BettiTable(const std::map<int, mpz_class>& dims) {
  for (const auto& [deg, dim] : dims) set(deg, dim);
}

BettiTable BettiTable::from_vector(const std::vector<long>& dims) {
  BettiTable t;
  for (std::size_t i = 0; i < dims.size(); ++i) t.set(static_cast<int>(i), dims[i]);
  return t;
}

const mpz_class& BettiTable::operator[](int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? kZero : it->second;
}

void BettiTable::set(int degree, const mpz_class& dim) {
  if (dim < 0) throw std::invalid_argument("BettiTable: negative dimension");
  if (dim == 0)
    dims_.erase(degree);
  else
    dims_[degree] = dim;
}

void BettiTable::add(int degree, const mpz_class& dim) { set(degree, (*this)[degree] + dim); }

int BettiTable::min_degree() const {
  if (dims_.empty()) throw std::logic_error("min_degree of an empty table");
  return dims_.begin()->first;
}

int BettiTable::max_degree() const {
  if (dims_.empty()) throw std::logic_error("max_degree of an empty table");
  return dims_.rbegin()->first;
}

mpz_class BettiTable::total() const {
  mpz_class s = 0;
  for (const auto& [deg, dim] : dims_) s += dim;
  return s;
}

std::vector<mpz_class> BettiTable::to_vector() const {
  if (dims_.empty()) return {};
  if (min_degree() < 0) throw std::logic_error("to_vector: negative degrees present");
  std::vector<mpz_class> out(static_cast<std::size_t>(max_degree() + 1), 0);
  for (const auto& [deg, dim] : dims_) out[static_cast<std::size_t>(deg)] = dim;
  return out;
}

BettiTable BettiTable::reflect(int center) const {
  BettiTable out;
  for (const auto& [deg, dim] : dims_) out.set(center - deg, dim);
  return out;
}

BettiTable operator+(const BettiTable& a, const BettiTable& b) {
  BettiTable out = a;
  for (const auto& [deg, dim] : b.dims_) out.add(deg, dim);
  return out;
}

BettiTable unit_table() { return BettiTable{{0, 1}}; }

std::vector<BettiTable> super_sym_powers(const BettiTable& v, int pmax, int t_bound) {
  if (pmax < 0) throw std::invalid_argument("super_sym_powers: pmax must be >= 0");
  if (t_bound < 0) throw std::invalid_argument("super_sym_powers: t_bound must be >= 0");
  if (!v.empty() && v.min_degree() < 0)
    throw std::invalid_argument("super_sym_powers: negative degrees are not supported");

  // The auxiliary variable z is carried in the q slot of a BiSeries.
  BiSeries aux = BiSeries::one(pmax, t_bound);
  for (const auto& [deg, dim] : v.entries()) {
    if (deg > t_bound) continue;
    const int m = static_cast<int>(dim.get_si());
    if (dim != m) throw std::invalid_argument("super_sym_powers: dimension too large");
    if (deg % 2 == 0)
      aux = apply_factor(aux, -1, 1, deg, -m);
    else
      aux = apply_factor(aux, +1, 1, deg, m);
  }

  std::vector<BettiTable> out(static_cast<std::size_t>(pmax + 1));
  for (int p = 0; p <= pmax; ++p)
    for (int i = 0; i <= t_bound; ++i) out[static_cast<std::size_t>(p)].set(i, aux.at(p, i));
  return out;
}

BettiTable shift(const BettiTable& v, int s) {
  if (s < 0) throw std::invalid_argument("shift: s must be >= 0");
  if (s % 2 != 0) throw std::invalid_argument("shift: odd shift would break the parity convention");
  BettiTable out;
  for (const auto& [deg, dim] : v.entries()) out.set(deg + s, dim);
  return out;
}

BettiTable tensor(const BettiTable& v, const BettiTable& w) {
  BettiTable out;
  for (const auto& [d1, m1] : v.entries())
    for (const auto& [d2, m2] : w.entries()) out.add(d1 + d2, m1 * m2);
  return out;
}

void AlgebraPreset::validate() const {
  if (d <= 0 || d % 2 != 0) throw std::invalid_argument("preset '" + name + "': d must be even and positive");
  for (const auto& [deg, dim] : betti.entries()) {
    if (deg < 0 || deg > d)
      throw std::invalid_argument("preset '" + name + "': Betti support outside [0, d]");
    if (dim < 0) throw std::invalid_argument("preset '" + name + "': negative dimension");
  }
}

} // namespace hhw
