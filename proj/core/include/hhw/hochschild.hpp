#pragma once

// Brute-force Hochschild homology of finite-dimensional algebras through the
// bar complex C_k(A, M) = M (x) A^{(x)k}.

#include "hhw/finite_algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hhw {

inline constexpr std::uint64_t kDefaultSizeCap = 10'000'000;

/// Per-level comparison of two dimension lists.
struct DimReport {
  std::vector<long> lhs;
  std::vector<long> rhs;
  bool passed = false;
  std::string describe() const;
};

struct HomotopyReport {
  int trials = 0;
  int failures = 0;
  bool passed = false;
};

/// dim M * dim(A)^k. Throws ResourceError on overflow.
std::uint64_t chain_dim(const FiniteDimAlgebra& a, const Bimodule& m, int k);

/// Basis index u + dim M (a_1 + dim A (a_2 + ...)) of u (x) a_1 (x) ... (x) a_k.
Index chain_index(const FiniteDimAlgebra& a, const Bimodule& m, std::size_t u, const std::vector<std::size_t>& as);

/// b(m | a_1..a_k) = m a_1 | a_2..a_k + sum_{i=1}^{k-1} (-1)^i m | ..a_i a_{i+1}.. + (-1)^k a_k m | a_1..a_{k-1}
QVector bar_apply(const FiniteDimAlgebra& a, const Bimodule& m, int k, const QVector& chain);

/// Columns of b_k : C_k -> C_{k-1}, k >= 1. Throws ResourceError if the
/// matrix has more than `cap` entries.
std::vector<QVector> bar_differential(const FiniteDimAlgebra& a, const Bimodule& m, int k,
                                      std::uint64_t cap = kDefaultSizeCap);

/// dim HH_i(A, M) for i = 0..max_level.
std::vector<long> hh_dims(const FiniteDimAlgebra& a, const Bimodule& m, int max_level,
                          std::uint64_t cap = kDefaultSizeCap);

/// HH_*(A^{(x)n}, (A^{(x)(n-1)} (x) M)_sigma) against HH_*(A, M) for the
/// n-cycle sigma.
DimReport verify_homolog_i(const FiniteDimAlgebra& a, const Bimodule& m, int n, int max_level,
                           std::uint64_t cap = kDefaultSizeCap);

/// The automorphism c_1 (x) ... (x) c_n -> c_2 (x) ... (x) c_n (x) c_1 of A^{(x)n}.
QMatrix cyclic_shift(const FiniteDimAlgebra& a, int n);

/// For random cycles C in C_{m-1}(B, B_sigma), B = A^{(x)n}, checks
///   C - sigma(C) = d( sum_j (-1)^{j(m-1)} s^j(C) (x) 1 ),
/// where C is read as an n x m matrix whose last column is the coefficient,
/// s(c_1..c_m) = (c_2..c_m, sigma(c_1)) and d = (-1)^{level} b.
HomotopyReport homotopy_identity_check(const FiniteDimAlgebra& a, int n, int m, int trials,
                                       std::uint64_t seed = 0, std::uint64_t cap = kDefaultSizeCap);

/// Partition of group indices into conjugacy classes.
std::vector<std::vector<std::size_t>> conjugacy_classes(const std::vector<QMatrix>& group);

/// Indices of the elements commuting with group[g].
std::vector<std::size_t> centralizer(const std::vector<QMatrix>& group, std::size_t g);

/// dim HH_i(B, M)^H where each h in H acts diagonally on every tensor slot
/// (M must share B's basis). Computed on the invariant subcomplex.
std::vector<long> invariant_hh_dims(const FiniteDimAlgebra& b, const Bimodule& m, const std::vector<QMatrix>& h,
                                    int max_level, std::uint64_t cap = kDefaultSizeCap);

/// Columns of the averaging operator (1/|H|) sum_h h on C_k(B, M).
std::vector<QVector> averaging_operator(const FiniteDimAlgebra& b, const Bimodule& m, const std::vector<QMatrix>& h,
                                        int k);

/// HH_*(Q[G] x| B) against sum over conjugacy classes of HH_*(B, B_g)^{Z(g)}.
DimReport afls_check(const FiniteDimAlgebra& b, int max_level, std::uint64_t cap = kDefaultSizeCap);

} // namespace hhw
