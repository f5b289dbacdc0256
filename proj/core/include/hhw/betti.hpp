#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace hhw {

/// Finitely supported map degree -> dimension of a graded super vector space.
///
/// A class in degree i has parity (-1)^i. The same type holds homological and
/// cohomological tables; each operation says which one it expects. Zero
/// entries are never stored, so two tables compare equal iff they agree as
/// functions of the degree.
class BettiTable {
public:
  BettiTable() = default;
  BettiTable(std::initializer_list<std::pair<const int, long>> dims);
  explicit BettiTable(const std::map<int, mpz_class>& dims);

  /// Index = degree.
  static BettiTable from_vector(const std::vector<long>& dims);

  const mpz_class& operator[](int degree) const;
  void set(int degree, const mpz_class& dim);
  void add(int degree, const mpz_class& dim);

  bool empty() const { return dims_.empty(); }
  /// Lowest / highest supported degree; the table must be nonempty.
  int min_degree() const;
  int max_degree() const;
  mpz_class total() const;

  /// Dense coefficient list 0..max_degree (empty for the zero table).
  std::vector<mpz_class> to_vector() const;

  const std::map<int, mpz_class>& entries() const { return dims_; }

  /// Degree i -> degree (center - i).
  BettiTable reflect(int center) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
  friend BettiTable operator+(const BettiTable& a, const BettiTable& b);

private:
  std::map<int, mpz_class> dims_;
};

/// The one-dimensional table concentrated in degree 0.
BettiTable unit_table();

/// Tables of S^p V for p = 0..pmax, where odd-degree classes obey the super
/// sign rule (they multiply exterior-wise). Only degrees <= t_bound are kept.
/// Read off from the z^p coefficients of
///   prod_{j even} (1 - z t^j)^{-dim V_j} * prod_{j odd} (1 + z t^j)^{dim V_j}.
std::vector<BettiTable> super_sym_powers(const BettiTable& v, int pmax, int t_bound);

/// Degree shift by an even s >= 0.
BettiTable shift(const BettiTable& v, int s);

/// Graded tensor product (convolution of dimensions).
BettiTable tensor(const BettiTable& v, const BettiTable& w);

/// Input data for a rank-one algebra in the class VB(d).
struct AlgebraPreset {
  std::string name;
  int d = 2;
  BettiTable betti; ///< cohomological

  /// Throws std::invalid_argument unless d is even and positive, dims are
  /// nonnegative and the support lies in [0, d].
  void validate() const;
};

} // namespace hhw
