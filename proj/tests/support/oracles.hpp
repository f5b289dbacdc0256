#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's algorithms; only plain data crosses
// the boundary.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------- partitions

/// Euler's pentagonal-number recurrence for p(0..nmax).
inline std::vector<mpz_class> partition_counts(int nmax) {
  std::vector<mpz_class> p(static_cast<std::size_t>(nmax + 1), 0);
  p[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    mpz_class acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}
} // namespace detail

/// Every partition of n as a weakly decreasing list.
inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

/// #{lambda |- n : l(lambda) = l} by explicit enumeration.
inline long partitions_with_length(int n, int l) {
  long c = 0;
  for (const auto& lam : partitions(n))
    if (static_cast<int>(lam.size()) == l) ++c;
  return c;
}

// ------------------------------------------------------------------- series

using Coeffs = std::map<std::pair<int, int>, mpz_class>;

/// One factor (1 + sign q^qexp t^texp)^power.
struct Factor {
  int sign;
  int qexp;
  int texp;
  int power;
};

/// Generalized binomial coefficient C(e, j) for integer e.
inline mpz_class binom(long e, long j) {
  if (j < 0) return 0;
  if (e >= 0) {
    if (j > e) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(j));
    return r;
  }
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(-e + j - 1), static_cast<unsigned long>(j));
  return (j % 2 == 0) ? r : mpz_class(-r);
}

/// Expands a product of factors by the binomial theorem and naive
/// convolution, truncated to q^qb, t^tb.
inline Coeffs expand_product(const std::vector<Factor>& factors, int qb, int tb) {
  Coeffs acc{{{0, 0}, 1}};
  for (const Factor& f : factors) {
    if (f.qexp > qb || f.power == 0) continue;
    Coeffs expansion;
    for (long j = 0; j * f.qexp <= qb && j * f.texp <= tb; ++j) {
      mpz_class c = binom(f.power, j);
      if (f.sign < 0 && j % 2 == 1) c = -c;
      if (c != 0) expansion[{static_cast<int>(j) * f.qexp, static_cast<int>(j) * f.texp}] = c;
      if (f.texp == 0 && j > qb) break;
    }
    Coeffs next;
    for (const auto& [ka, va] : acc)
      for (const auto& [kb, vb] : expansion) {
        const int n = ka.first + kb.first;
        const int i = ka.second + kb.second;
        if (n <= qb && i <= tb) next[{n, i}] += va * vb;
      }
    for (auto it = next.begin(); it != next.end();) it = (it->second == 0) ? next.erase(it) : std::next(it);
    acc = std::move(next);
  }
  return acc;
}

/// Factors of prod_m prod_k (1 + (-1)^{k-1} q^m t^{k+d(m-1)})^{(-1)^{k-1} b_k}.
inline std::vector<Factor> goettsche_factors(const std::vector<long>& betti, int d, int qb) {
  std::vector<Factor> out;
  for (int m = 1; m <= qb; ++m)
    for (int k = 0; k < static_cast<int>(betti.size()); ++k) {
      const long b = betti[static_cast<std::size_t>(k)];
      if (b == 0) continue;
      const int texp = k + d * (m - 1);
      if (k % 2 == 0)
        out.push_back({-1, m, texp, static_cast<int>(-b)});
      else
        out.push_back({+1, m, texp, static_cast<int>(b)});
    }
  return out;
}

// ------------------------------------------------------------- super spaces

/// Dimension table (degree -> dim) of S^p V, V given by degree -> dim, from
/// explicit enumeration of monomials in a homogeneous basis: even basis
/// vectors may repeat, odd ones appear at most once.
inline std::map<int, long> super_sym_power(const std::map<int, long>& v, int p) {
  std::vector<int> basis;
  for (const auto& [deg, dim] : v)
    for (long j = 0; j < dim; ++j) basis.push_back(deg);
  std::map<int, long> out;
  // choose multiplicities for each basis element in order
  auto rec = [&](auto&& self, std::size_t idx, int left, int degree) -> void {
    if (left == 0) {
      ++out[degree];
      return;
    }
    if (idx == basis.size()) return;
    const int deg = basis[idx];
    const int maxmul = (deg % 2 != 0) ? std::min(1, left) : left;
    for (int mul = 0; mul <= maxmul; ++mul) self(self, idx + 1, left - mul, degree + mul * deg);
  };
  rec(rec, 0, p, 0);
  return out;
}

inline std::map<int, long> tensor(const std::map<int, long>& a, const std::map<int, long>& b) {
  std::map<int, long> out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out[i + j] += x * y;
  return out;
}

/// Cohomology table of A(n) by the partition sum, with parts of size i shifted
/// by shift_per_part * (i - 1).
inline std::map<int, long> wreath_table(const std::map<int, long>& v, int n, int shift_per_part) {
  std::map<int, long> total;
  for (const auto& lam : partitions(n)) {
    std::map<int, long> term{{0, 1}};
    std::map<int, int> mult;
    for (int part : lam) ++mult[part];
    for (const auto& [i, p] : mult) {
      std::map<int, long> shifted;
      for (const auto& [deg, dim] : v) shifted[deg + shift_per_part * (i - 1)] = dim;
      term = tensor(term, super_sym_power(shifted, p));
    }
    for (const auto& [deg, dim] : term) total[deg] += dim;
  }
  for (auto it = total.begin(); it != total.end();) it = (it->second == 0) ? total.erase(it) : std::next(it);
  return total;
}

// ------------------------------------------------------------ dense algebra

using Matrix = std::vector<std::vector<mpq_class>>;

/// Rank by plain Gaussian elimination over Q.
inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Structure constants: mult[i][j][k] is the e_k coefficient of e_i e_j.
struct Algebra {
  std::size_t dim = 0;
  std::vector<std::vector<std::vector<mpq_class>>> mult;
};

inline Algebra dual_numbers(std::size_t k) {
  Algebra a{k, std::vector(k, std::vector(k, std::vector<mpq_class>(k, 0)))};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; i + j < k; ++j) a.mult[i][j][i + j] = 1;
  return a;
}

/// Q[G] for a finite group given by its multiplication table.
inline Algebra group_algebra(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  Algebra a{n, std::vector(n, std::vector(n, std::vector<mpq_class>(n, 0)))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.mult[i][j][table[i][j]] = 1;
  return a;
}

/// dim HH_i(A, A) for i = 0..max_level from the dense bar complex.
inline std::vector<long> hochschild_dims(const Algebra& a, int max_level) {
  const std::size_t d = a.dim;
  auto power = [&](int k) {
    std::size_t p = 1;
    for (int i = 0; i < k; ++i) p *= d;
    return p;
  };
  // b_k : M (x) A^k -> M (x) A^{k-1}, basis index u + d (a_1 + d (a_2 + ...)).
  auto differential = [&](int k) {
    const std::size_t ncols = power(k + 1), nrows = power(k);
    Matrix m(nrows, std::vector<mpq_class>(ncols, 0));
    std::vector<std::size_t> t(static_cast<std::size_t>(k + 1));
    for (std::size_t col = 0; col < ncols; ++col) {
      std::size_t x = col;
      for (auto& digit : t) {
        digit = x % d;
        x /= d;
      }
      auto encode = [&](const std::vector<std::size_t>& s) {
        std::size_t idx = 0;
        for (std::size_t j = s.size(); j-- > 0;) idx = idx * d + s[j];
        return idx;
      };
      for (int i = 0; i <= k; ++i) {
        const mpq_class sign = (i % 2 == 0) ? 1 : -1;
        std::vector<std::size_t> s;
        std::size_t l = 0, r = 0;
        if (i < k) {
          l = t[static_cast<std::size_t>(i)];
          r = t[static_cast<std::size_t>(i + 1)];
        } else {
          l = t[static_cast<std::size_t>(k)];
          r = t[0];
        }
        for (std::size_t p = 0; p < d; ++p) {
          const mpq_class& c = a.mult[l][r][p];
          if (c == 0) continue;
          if (i < k) {
            s.assign(t.begin(), t.end());
            s[static_cast<std::size_t>(i)] = p;
            s.erase(s.begin() + i + 1);
          } else {
            s.assign(t.begin(), t.end() - 1);
            s[0] = p;
          }
          m[encode(s)][col] += sign * c;
        }
      }
    }
    return m;
  };
  std::vector<std::size_t> ranks(static_cast<std::size_t>(max_level + 2), 0);
  for (int k = 1; k <= max_level + 1; ++k) ranks[static_cast<std::size_t>(k)] = rank(differential(k));
  std::vector<long> out;
  for (int i = 0; i <= max_level; ++i)
    out.push_back(static_cast<long>(power(i + 1)) - static_cast<long>(ranks[static_cast<std::size_t>(i)]) -
                  static_cast<long>(ranks[static_cast<std::size_t>(i + 1)]));
  return out;
}

// ---------------------------------------------------------- finite groups

/// Number of conjugacy classes of a group given by its multiplication table
/// (element 0 need not be the identity).
inline std::size_t conjugacy_class_count(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  std::size_t e = 0;
  for (std::size_t g = 0; g < n; ++g) {
    bool unit = true;
    for (std::size_t h = 0; h < n && unit; ++h) unit = table[g][h] == h;
    if (unit) e = g;
  }
  std::vector<std::size_t> inv(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] == e) inv[g] = h;
  std::vector<int> cls(n, -1);
  std::size_t count = 0;
  for (std::size_t g = 0; g < n; ++g) {
    if (cls[g] >= 0) continue;
    for (std::size_t h = 0; h < n; ++h) cls[table[table[h][g]][inv[h]]] = static_cast<int>(count);
    ++count;
  }
  return count;
}

/// Multiplication table of the hyperoctahedral group Z_2 wr S_n on signed
/// permutations of n letters.
inline std::vector<std::vector<std::size_t>> hyperoctahedral_table(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> elems; // signed images: +(j+1) or -(j+1)
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        e[static_cast<std::size_t>(i)] = ((signs >> i) & 1 ? -1 : 1) * (perm[static_cast<std::size_t>(i)] + 1);
      elems.push_back(e);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  const std::size_t size = elems.size();
  std::vector<std::vector<std::size_t>> table(size, std::vector<std::size_t>(size));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const int img = elems[b][static_cast<std::size_t>(i)];
        const int s = img < 0 ? -1 : 1;
        c[static_cast<std::size_t>(i)] = s * elems[a][static_cast<std::size_t>(s * img - 1)];
      }
      table[a][b] = static_cast<std::size_t>(std::find(elems.begin(), elems.end(), c) - elems.begin());
    }
  return table;
}

// ------------------------------------------------- twisted homotopy identity

/// Bar chains over Q[Z_2^n] with coefficients in the twisted bimodule B_sigma,
/// sigma the cyclic shift of tensor factors. A basis chain is the list of
/// columns (a_1, ..., a_k, u): group elements as bitmasks, coefficient last.
class CyclicZ2Chains {
public:
  using Columns = std::vector<unsigned>;
  using Chain = std::map<Columns, mpq_class>;

  explicit CyclicZ2Chains(int n) : n_(n) {}

  /// Bit j of sigma(c) is bit j+1 of c.
  unsigned sigma(unsigned c) const {
    const unsigned mask = (1u << n_) - 1;
    return ((c >> 1) | (c << (n_ - 1))) & mask;
  }

  /// b(u | a_1..a_k) = u sigma(a_1) | a_2.. + sum_i (-1)^i u | .. a_i a_{i+1} .. + (-1)^k a_k u | a_1..a_{k-1}
  Chain boundary(const Chain& c) const {
    Chain out;
    for (const auto& [cols, coef] : c) {
      const std::size_t k = cols.size() - 1;
      if (k == 0) continue;
      const unsigned u = cols.back();
      Columns a(cols.begin(), cols.end() - 1);
      {
        Columns s(a.begin() + 1, a.end());
        s.push_back(u ^ sigma(a[0]));
        out[s] += coef;
      }
      for (std::size_t i = 1; i < k; ++i) {
        Columns s;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == i) continue;
          s.push_back(j == i - 1 ? (a[j] ^ a[j + 1]) : a[j]);
        }
        s.push_back(u);
        out[s] += (i % 2 == 0) ? coef : mpq_class(-coef);
      }
      {
        Columns s(a.begin(), a.end() - 1);
        s.push_back(a[k - 1] ^ u);
        out[s] += (k % 2 == 0) ? coef : mpq_class(-coef);
      }
    }
    prune(out);
    return out;
  }

  /// s(c_1, ..., c_m) = (c_2, ..., c_m, sigma(c_1)).
  Chain shift(const Chain& c) const {
    Chain out;
    for (const auto& [cols, coef] : c) {
      Columns s(cols.begin() + 1, cols.end());
      s.push_back(sigma(cols.front()));
      out[s] += coef;
    }
    return out;
  }

  Chain apply_sigma(const Chain& c) const {
    Chain out;
    for (const auto& [cols, coef] : c) {
      Columns s = cols;
      for (auto& x : s) x = sigma(x);
      out[s] += coef;
    }
    return out;
  }

  /// Appends the unit column: the old columns become the bar entries.
  static Chain append_unit(const Chain& c) {
    Chain out;
    for (const auto& [cols, coef] : c) {
      Columns s = cols;
      s.push_back(0u);
      out[s] += coef;
    }
    return out;
  }

  /// Random chain with m columns (level m - 1).
  Chain random_chain(std::mt19937_64& rng, std::size_t m, int terms) const {
    std::uniform_int_distribution<unsigned> elem(0, (1u << n_) - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    Chain c;
    for (int t = 0; t < terms; ++t) {
      Columns cols(m);
      for (auto& x : cols) x = elem(rng);
      c[cols] += coef(rng);
    }
    prune(c);
    return c;
  }

  /// Checks C - sigma(C) = (-1)^m b(sum_j (-1)^{j(m-1)} s^j(C) (x) 1) for C
  /// with m columns.
  bool identity_holds(const Chain& c, std::size_t m) const {
    Chain lhs = c;
    for (const auto& [cols, coef] : apply_sigma(c)) lhs[cols] -= coef;
    prune(lhs);
    Chain h, sj = c;
    for (std::size_t j = 0; j < m; ++j) {
      const bool neg = (j * (m - 1)) % 2 == 1;
      for (const auto& [cols, coef] : append_unit(sj)) h[cols] += neg ? mpq_class(-coef) : coef;
      sj = shift(sj);
    }
    Chain rhs = boundary(h);
    if (m % 2 == 1)
      for (auto& [cols, coef] : rhs) coef = -coef;
    prune(rhs);
    return lhs == rhs;
  }

  static void prune(Chain& c) {
    for (auto it = c.begin(); it != c.end();) it = (it->second == 0) ? c.erase(it) : std::next(it);
  }

private:
  int n_;
};

} // namespace oracle
