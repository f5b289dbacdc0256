#include "hhw/rational_function.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hhw {

QPoly::QPoly(const mpq_class& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int k, const mpq_class& c) {
  if (k < 0) throw std::invalid_argument("QPoly::monomial: negative exponent");
  std::vector<mpq_class> v(static_cast<std::size_t>(k + 1), 0);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpq_class QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<mpq_class> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a) {
  QPoly out = a;
  for (auto& c : out.c_) c = -c;
  return out;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  if (b.is_zero()) throw std::domain_error("QPoly: division by zero");
  rem = a;
  if (a.degree() < b.degree()) {
    quot = QPoly();
    return;
  }
  std::vector<mpq_class> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const mpq_class lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    const mpq_class c = rem.leading() / lead;
    q[static_cast<std::size_t>(shift)] = c;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      rem.c_[j + static_cast<std::size_t>(shift)] -= c * b.c_[j];
    rem.trim();
  }
  quot = QPoly(std::move(q));
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const mpq_class inv = 1 / a.leading();
  for (auto& c : a.c_) c *= inv;
  return a;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    mpq_class c = c_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

RationalFunction::RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  normalize();
}

RationalFunction RationalFunction::q_power(int k) {
  if (k >= 0) return RationalFunction(QPoly::monomial(k), QPoly(mpq_class(1)));
  return RationalFunction(QPoly(mpq_class(1)), QPoly::monomial(-k));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(mpq_class(1));
    return;
  }
  if (!den_.is_constant()) {
    QPoly g = QPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      QPoly q, r;
      QPoly::divmod(num_, g, q, r);
      num_ = std::move(q);
      QPoly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  const mpq_class lead = den_.leading();
  if (lead != 1) {
    const QPoly inv(mpq_class(1 / lead));
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction out = a;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant() && b.is_constant()) return RationalFunction(a.num_.coeff(0) * b.num_.coeff(0));
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  if (a.is_constant() && b.is_constant()) return RationalFunction(a.num_.coeff(0) / b.num_.coeff(0));
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  // c q^j / q^k prints as c*q^(j-k)
  const auto& d = den_.coeffs();
  const auto& n = num_.coeffs();
  const bool den_monomial = std::count_if(d.begin(), d.end(), [](const mpq_class& c) { return sgn(c) != 0; }) == 1;
  const bool num_monomial = std::count_if(n.begin(), n.end(), [](const mpq_class& c) { return sgn(c) != 0; }) == 1;
  if (den_monomial && num_monomial) {
    const int e = num_.degree() - den_.degree();
    const mpq_class& c = num_.leading();
    std::string out = c == 1 ? "" : c == -1 ? "-" : c.get_str() + "*";
    return out + "q^" + std::to_string(e);
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace hhw
