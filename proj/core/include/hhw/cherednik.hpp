#pragma once

// Rational Cherednik algebra of type A_{n-1} over Q[k]: generated by
// x_1..x_n, p_1..p_n and S_n with
//   sigma x_i = x_{sigma(i)} sigma,   sigma p_i = p_{sigma(i)} sigma,
//   [x_i, x_j] = [p_i, p_j] = 0,
//   [x_i, p_j] = k s_ij (i != j),     [x_i, p_i] = 1 - k sum_{j != i} s_ij,
// where [a, b] = ab - ba. Elements are kept in the normal order
// x-monomial, permutation, p-monomial.

#include "hhw/rational_function.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hhw {

/// One-line notation, 0-based: perm[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& s, const Perm& t); ///< (st)(i) = s(t(i))
Perm inverse(const Perm& s);
Perm transposition(int n, int i, int j);
bool is_identity(const Perm& s);
std::vector<Perm> all_perms(int n);

struct Letter {
  enum class Kind { x, perm, p };
  Kind kind;
  int index = 0; ///< 0-based, for x and p
  Perm perm;     ///< for perm
  friend auto operator<=>(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

Letter x_letter(int i);
Letter p_letter(int i);
Letter perm_letter(Perm s);

struct NormalMonomial {
  std::vector<int> xexp;
  Perm perm;
  std::vector<int> pexp;
  int degree() const;
  friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;
};

NormalMonomial unit_monomial(int n);
Word to_word(const NormalMonomial& m);

class CherednikElement {
public:
  explicit CherednikElement(int n) : n_(n) {}
  static CherednikElement monomial(const NormalMonomial& m, const QPoly& c = QPoly(mpq_class(1)));
  static CherednikElement one(int n) { return monomial(unit_monomial(n)); }

  int n() const { return n_; }
  const std::map<NormalMonomial, QPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const NormalMonomial& m, const QPoly& c);

  friend bool operator==(const CherednikElement&, const CherednikElement&) = default;
  friend CherednikElement operator+(CherednikElement a, const CherednikElement& b);
  friend CherednikElement operator-(CherednikElement a, const CherednikElement& b);
  friend CherednikElement operator*(const QPoly& c, CherednikElement a);

  /// e.g. "x1 p1 - 1 + k s12".
  std::string to_string() const;

private:
  int n_;
  std::map<NormalMonomial, QPoly> terms_;
};

enum class Strategy { leftmost, rightmost };

/// Rewrites a word into normal order. Throws std::invalid_argument for
/// n < 2 or letters out of range.
CherednikElement normal_order(const Word& word, int n, Strategy strategy = Strategy::leftmost);

/// Throws std::invalid_argument on mismatched n.
CherednikElement multiply(const CherednikElement& a, const CherednikElement& b);

/// Evaluates all coefficients at k = 0.
CherednikElement specialize_k0(const CherednikElement& a);

/// Normal form in Q[S_n] x| (Weyl algebra)^{(x)n}, computed without the
/// rewriting system. Agrees with normal_order at k = 0.
CherednikElement crossed_product_normal_form(const Word& word, int n);

/// e = (1/n!) sum_sigma sigma.
CherednikElement symmetrizer(int n);
/// e a e.
CherednikElement spherical_product(const CherednikElement& a);

/// Tokens separated by spaces or '*': x<i>, p<i>, s<i><j>, s<i>,<j>, g<one-line>
/// (1-based), or 1.
Word parse_word(std::string_view text, int n);
std::string to_string(const Word& w);

struct ConfluenceReport {
  std::size_t words_checked = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
};

/// Reduces every word of length <= max_len over {x_i, p_i, non-identity
/// permutations} with both strategies and compares.
ConfluenceReport confluence_check(int n, int max_len);

struct PbwReport {
  std::size_t expected = 0;  ///< n! C(2n + D, D)
  std::size_t counted = 0;   ///< normal monomials of degree <= D
  std::size_t rank = 0;      ///< rank of their Dunkl operators
  bool filtration_ok = true; ///< every word of (x,p)-length <= D reduces into degree <= its length
  bool passed = false;
};

/// Flatness on degree <= max_deg: counts normal monomials, checks they are
/// linearly independent as Dunkl operators at k = 3/7, and checks that words
/// reduce into the span of lower-degree monomials.
PbwReport pbw_dimension_check(int n, int max_deg);

/// Polynomial in x_1..x_n over Q: exponent vector -> coefficient.
using QMultiPoly = std::map<std::vector<int>, mpq_class>;

/// Image of f under a normal monomial acting through the Dunkl
/// representation at the rational value k: x_i multiplies, sigma permutes
/// variables, p_i = -D_i with D_i = d/dx_i - k sum_{j != i} (1 - s_ij)/(x_i - x_j).
QMultiPoly dunkl_apply(const NormalMonomial& m, const mpq_class& k, const QMultiPoly& f);
/// Letter-by-letter version, rightmost letter first.
QMultiPoly dunkl_apply(const Word& w, const mpq_class& k, const QMultiPoly& f);

} // namespace hhw
