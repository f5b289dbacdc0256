#pragma once

#include "hhw/linalg.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace hhw {

using QVector = SparseVector<mpq_class>;

/// Dense square matrix over Q; column j is the image of basis vector j.
class QMatrix {
public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static QMatrix identity(std::size_t n);
  /// Permutation matrix sending basis j to basis images[j].
  static QMatrix permutation(const std::vector<std::size_t>& images);
  static QMatrix diagonal(const std::vector<mpq_class>& d);

  std::size_t size() const { return n_; }
  mpq_class& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  QVector column(std::size_t j) const;
  QVector apply(const QVector& v) const;
  /// Returns std::nullopt-equivalent empty matrix if singular.
  bool invert(QMatrix& out) const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<mpq_class> a_;
};

/// Finite-dimensional associative unital algebra over Q given by structure
/// constants e_i e_j = sum_k c_{ij}^k e_k, optionally with a finite group
/// acting by algebra automorphisms (all group elements listed, identity
/// included).
class FiniteDimAlgebra {
public:
  FiniteDimAlgebra() = default;
  /// `products[i * dim + j]` is e_i e_j.
  FiniteDimAlgebra(std::string name, std::size_t dim, std::vector<QVector> products, QVector unit);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const QVector& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  const QVector& unit() const { return unit_; }
  QVector multiply(const QVector& a, const QVector& b) const;

  const std::vector<QMatrix>& group() const { return group_; }
  bool has_action() const { return !group_.empty(); }
  /// Installs a group action. Throws std::invalid_argument if an element is
  /// not an automorphism or the set is not closed under composition.
  FiniteDimAlgebra with_action(std::vector<QMatrix> group) const;

  /// Throws std::invalid_argument if associativity or the unit law fails.
  void validate() const;

  /// Index of g in group(), or -1.
  int group_index(const QMatrix& g) const;

private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<QVector> products_;
  QVector unit_;
  std::vector<QMatrix> group_;
};

/// Bimodule over a FiniteDimAlgebra: left and right actions of basis
/// elements on the module basis.
class Bimodule {
public:
  Bimodule() = default;
  Bimodule(std::string name, std::size_t algebra_dim, std::size_t dim, std::vector<QVector> left,
           std::vector<QVector> right);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t algebra_dim() const { return alg_dim_; }
  /// e_i . m_u
  const QVector& left(std::size_t i, std::size_t u) const { return left_[i * dim_ + u]; }
  /// m_u . e_i
  const QVector& right(std::size_t u, std::size_t i) const { return right_[u * alg_dim_ + i]; }

  /// Checks the bimodule axioms against `algebra`.
  void validate(const FiniteDimAlgebra& algebra) const;

private:
  std::string name_;
  std::size_t alg_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<QVector> left_;
  std::vector<QVector> right_;
};

// Catalog of small algebras.

FiniteDimAlgebra ground_field();
/// Q[x]/(x^k), basis 1, x, ..., x^{k-1}.
FiniteDimAlgebra truncated_polynomial(std::size_t k);
/// Q[Z_m], basis g^0, ..., g^{m-1}.
FiniteDimAlgebra cyclic_group_algebra(std::size_t m);

/// A^{(x)n}; basis index sum_j a_j dim^j, component j is the j-th tensor factor.
FiniteDimAlgebra tensor_power(const FiniteDimAlgebra& a, std::size_t n);
/// Crossed product Q[G] x| B for B.group(), basis b_i # g_k with index
/// i + dim(B) k and product (b # g)(c # h) = b g(c) # gh.
FiniteDimAlgebra crossed_product(const FiniteDimAlgebra& b);
/// Same algebra in the basis f_j = sum_i P(i, j) e_i.
FiniteDimAlgebra change_basis(const FiniteDimAlgebra& a, const QMatrix& p);

/// Matrix of the automorphism of A^{(x)n} permuting tensor factors: the
/// factor in position j moves to position perm[j].
QMatrix tensor_permutation(const FiniteDimAlgebra& a, std::size_t n, const std::vector<std::size_t>& perm);
/// g^{(x)n} acting factorwise.
QMatrix tensor_power_matrix(const QMatrix& g, std::size_t n);
/// The full symmetric group acting on A^{(x)n} by permuting factors.
std::vector<QMatrix> symmetric_group_action(const FiniteDimAlgebra& a, std::size_t n);

/// A as a bimodule over itself.
Bimodule regular_bimodule(const FiniteDimAlgebra& a);
/// A_g: left action as usual, right action twisted, m . a = m g(a).
Bimodule twisted_bimodule(const FiniteDimAlgebra& a, const QMatrix& g);
/// (A^{(x)(n-1)} (x) M)_sigma over A^{(x)n}:
///   (a_1..a_n)(b_1..b_{n-1} m)(c_1..c_n) = a_1 b_1 c_2 (x) ... (x) a_{n-1} b_{n-1} c_n (x) a_n m c_1.
/// Module basis index: b-digits first (base dim A), the M index last.
Bimodule cyclic_twisted_bimodule(const FiniteDimAlgebra& a, const Bimodule& m, std::size_t n);

/// Tensor product of sparse vectors; component k has radix radices[k] and the
/// first component is the least significant digit.
QVector tensor_expand(const std::vector<const QVector*>& parts, const std::vector<std::size_t>& radices);

/// Helpers on tensor-power basis indices.
std::vector<std::size_t> digits(Index index, std::size_t base, std::size_t count);
Index from_digits(const std::vector<std::size_t>& d, std::size_t base);

} // namespace hhw
