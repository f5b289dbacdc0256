#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace hhw {

/// Truncated bivariate power series sum c[n][i] q^n t^i with exact integer
/// coefficients, 0 <= n <= q_bound, 0 <= i <= t_bound.
///
/// q tracks the symmetric-power rank and t the cohomological degree. Storage
/// is dense; every operation returns a new value.
class BiSeries {
public:
  BiSeries(int q_bound, int t_bound);

  /// The constant series 1.
  static BiSeries one(int q_bound, int t_bound);
  /// c q^n t^i, or zero if the monomial lies outside the bounds.
  static BiSeries monomial(int q_bound, int t_bound, int n, int i, const mpz_class& c = 1);

  int q_bound() const { return q_bound_; }
  int t_bound() const { return t_bound_; }

  const mpz_class& at(int n, int i) const;
  void set(int n, int i, const mpz_class& value);
  void add(int n, int i, const mpz_class& value);

  /// Coefficients of q^n as a polynomial in t (length t_bound + 1).
  std::vector<mpz_class> q_coefficient(int n) const;

  /// Restrict to smaller bounds.
  BiSeries truncate(int q_bound, int t_bound) const;

  bool is_zero() const;

  friend bool operator==(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b);

private:
  std::size_t index(int n, int i) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(t_bound_ + 1) +
           static_cast<std::size_t>(i);
  }

  int q_bound_;
  int t_bound_;
  std::vector<mpz_class> coeff_;
};

/// Truncated product. Throws std::invalid_argument on mismatched bounds.
BiSeries series_mul(const BiSeries& a, const BiSeries& b);

/// Multiplies by (1 + sign q^qexp t^texp)^power. Negative powers are expanded
/// as geometric series under the truncation; qexp = 0 with a negative power is
/// rejected since the factor is then not invertible in the truncated ring.
BiSeries apply_factor(const BiSeries& a, int sign, int qexp, int texp, int power);

} // namespace hhw
