#include "hhw/series.hpp"

#include <stdexcept>
#include <string>

namespace hhw {

namespace {

void require_same_bounds(const BiSeries& a, const BiSeries& b) {
  if (a.q_bound() != b.q_bound() || a.t_bound() != b.t_bound()) {
    throw std::invalid_argument("BiSeries bounds differ: (" + std::to_string(a.q_bound()) + "," +
                                std::to_string(a.t_bound()) + ") vs (" +
                                std::to_string(b.q_bound()) + "," + std::to_string(b.t_bound()) +
                                ")");
  }
}

// In-place multiplication by (1 + s y) with y = q^qexp t^texp. Traversal order
// runs from high to low so each source coefficient is read before it is updated.
void mul_linear(BiSeries& a, int s, int qexp, int texp) {
  for (int n = a.q_bound(); n >= qexp; --n) {
    for (int i = a.t_bound(); i >= texp; --i) {
      const mpz_class& src = a.at(n - qexp, i - texp);
      if (src == 0) continue;
      if (s > 0)
        a.add(n, i, src);
      else
        a.add(n, i, -src);
    }
  }
}

// In-place division by (1 + s y); requires qexp >= 1 or texp >= 1 so the
// recurrence only reads already-final coefficients.
void div_linear(BiSeries& a, int s, int qexp, int texp) {
  for (int n = qexp; n <= a.q_bound(); ++n) {
    for (int i = texp; i <= a.t_bound(); ++i) {
      const mpz_class& prev = a.at(n - qexp, i - texp);
      if (prev == 0) continue;
      if (s > 0)
        a.add(n, i, -prev);
      else
        a.add(n, i, prev);
    }
  }
}

} // namespace

BiSeries::BiSeries(int q_bound, int t_bound) : q_bound_(q_bound), t_bound_(t_bound) {
  if (q_bound < 0 || t_bound < 0) throw std::invalid_argument("BiSeries bounds must be >= 0");
  coeff_.assign(static_cast<std::size_t>(q_bound + 1) * static_cast<std::size_t>(t_bound + 1), 0);
}

BiSeries BiSeries::one(int q_bound, int t_bound) {
  BiSeries s(q_bound, t_bound);
  s.set(0, 0, 1);
  return s;
}

BiSeries BiSeries::monomial(int q_bound, int t_bound, int n, int i, const mpz_class& c) {
  BiSeries s(q_bound, t_bound);
  if (n >= 0 && i >= 0 && n <= q_bound && i <= t_bound) s.set(n, i, c);
  return s;
}

const mpz_class& BiSeries::at(int n, int i) const {
  if (n < 0 || i < 0 || n > q_bound_ || i > t_bound_)
    throw std::out_of_range("BiSeries index out of bounds");
  return coeff_[index(n, i)];
}

void BiSeries::set(int n, int i, const mpz_class& value) {
  if (n < 0 || i < 0 || n > q_bound_ || i > t_bound_)
    throw std::out_of_range("BiSeries index out of bounds");
  coeff_[index(n, i)] = value;
}

void BiSeries::add(int n, int i, const mpz_class& value) {
  if (n < 0 || i < 0 || n > q_bound_ || i > t_bound_)
    throw std::out_of_range("BiSeries index out of bounds");
  coeff_[index(n, i)] += value;
}

std::vector<mpz_class> BiSeries::q_coefficient(int n) const {
  std::vector<mpz_class> out(static_cast<std::size_t>(t_bound_ + 1));
  for (int i = 0; i <= t_bound_; ++i) out[static_cast<std::size_t>(i)] = at(n, i);
  return out;
}

BiSeries BiSeries::truncate(int q_bound, int t_bound) const {
  if (q_bound > q_bound_ || t_bound > t_bound_)
    throw std::invalid_argument("truncate: target bounds exceed source bounds");
  BiSeries out(q_bound, t_bound);
  for (int n = 0; n <= q_bound; ++n)
    for (int i = 0; i <= t_bound; ++i) out.set(n, i, at(n, i));
  return out;
}

bool BiSeries::is_zero() const {
  for (const auto& c : coeff_)
    if (c != 0) return false;
  return true;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  return a.q_bound_ == b.q_bound_ && a.t_bound_ == b.t_bound_ && a.coeff_ == b.coeff_;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  require_same_bounds(a, b);
  BiSeries out = a;
  for (std::size_t k = 0; k < out.coeff_.size(); ++k) out.coeff_[k] += b.coeff_[k];
  return out;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
  require_same_bounds(a, b);
  BiSeries out = a;
  for (std::size_t k = 0; k < out.coeff_.size(); ++k) out.coeff_[k] -= b.coeff_[k];
  return out;
}

BiSeries series_mul(const BiSeries& a, const BiSeries& b) {
  require_same_bounds(a, b);
  const int qb = a.q_bound();
  const int tb = a.t_bound();
  BiSeries out(qb, tb);
  mpz_class prod;
  for (int n1 = 0; n1 <= qb; ++n1) {
    for (int i1 = 0; i1 <= tb; ++i1) {
      const mpz_class& x = a.at(n1, i1);
      if (x == 0) continue;
      for (int n2 = 0; n1 + n2 <= qb; ++n2) {
        for (int i2 = 0; i1 + i2 <= tb; ++i2) {
          const mpz_class& y = b.at(n2, i2);
          if (y == 0) continue;
          prod = x * y;
          out.add(n1 + n2, i1 + i2, prod);
        }
      }
    }
  }
  return out;
}

BiSeries apply_factor(const BiSeries& a, int sign, int qexp, int texp, int power) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("apply_factor: sign must be +1 or -1");
  if (qexp < 0 || texp < 0) throw std::invalid_argument("apply_factor: exponents must be >= 0");
  if (qexp == 0 && power < 0)
    throw std::invalid_argument("apply_factor: qexp = 0 with negative power is not invertible");
  BiSeries out = a;
  if (power == 0 || qexp > a.q_bound() || texp > a.t_bound()) return out;
  if (qexp == 0 && texp == 0) {
    // Constant factor (1 + sign)^power.
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), sign > 0 ? 2 : 0, static_cast<unsigned long>(power));
    BiSeries scaled(a.q_bound(), a.t_bound());
    for (int n = 0; n <= a.q_bound(); ++n)
      for (int i = 0; i <= a.t_bound(); ++i) scaled.set(n, i, a.at(n, i) * c);
    return scaled;
  }
  if (power > 0) {
    for (int e = 0; e < power; ++e) mul_linear(out, sign, qexp, texp);
  } else {
    for (int e = 0; e < -power; ++e) div_linear(out, sign, qexp, texp);
  }
  return out;
}

} // namespace hhw
