#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hhw {

/// Dense univariate polynomial over Q, coefficients lowest degree first,
/// no trailing zeros.
class QPoly {
public:
  QPoly() = default;
  QPoly(const mpq_class& c); // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<mpq_class> coeffs);

  /// The monomial c X^k (k >= 0).
  static QPoly monomial(int k, const mpq_class& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; } ///< -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const mpq_class& leading() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int k) const;

  mpq_class eval(const mpq_class& x) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a);
  friend QPoly operator*(const QPoly& a, const QPoly& b);

  /// Euclidean division; throws std::domain_error on division by zero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  /// Monic gcd (zero if both are zero).
  static QPoly gcd(QPoly a, QPoly b);

  /// e.g. "3/2*q^2 - q + 1" in variable `var`.
  std::string to_string(const std::string& var = "q") const;

private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Element of Q(q), stored as num/den in lowest terms with monic denominator.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(mpq_class(1)) {}
  RationalFunction(const mpq_class& c) : num_(c), den_(mpq_class(1)) {} // NOLINT
  RationalFunction(long c) : RationalFunction(mpq_class(c)) {}          // NOLINT
  RationalFunction(QPoly num, QPoly den);

  /// q^k for any integer k.
  static RationalFunction q_power(int k);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

  std::string to_string() const;

private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }

} // namespace hhw
