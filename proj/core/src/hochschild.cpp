#include "hhw/hochschild.hpp"

#include "hhw/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hhw {

namespace {

void check_cap(std::uint64_t rows, std::uint64_t cols, std::uint64_t cap, const char* what) {
  const unsigned __int128 entries = static_cast<unsigned __int128>(rows) * cols;
  if (entries > cap) {
    std::ostringstream os;
    os << what << ": " << rows << " x " << cols << " matrix exceeds the size cap of " << cap << " entries";
    throw ResourceError(os.str());
  }
}

struct Chain {
  std::size_t u;
  std::vector<std::size_t> as;
};

Chain decode(Index idx, std::size_t dim_m, std::size_t dim_a, int k) {
  Chain c;
  c.u = static_cast<std::size_t>(idx % dim_m);
  c.as = digits(idx / dim_m, dim_a, static_cast<std::size_t>(k));
  return c;
}

Index encode(std::size_t u, const std::vector<std::size_t>& as, std::size_t dim_m, std::size_t dim_a) {
  return u + dim_m * from_digits(as, dim_a);
}

void accumulate(std::map<Index, mpq_class>& acc, Index key, const mpq_class& c) {
  auto [it, inserted] = acc.try_emplace(key, c);
  if (!inserted) it->second += c;
}

std::vector<std::size_t> permutation_images(const QMatrix& g) {
  std::vector<std::size_t> img(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const QVector col = g.column(j);
    if (col.size() != 1 || col.front().second != 1)
      throw std::invalid_argument("permutation_images: not a permutation matrix");
    img[j] = static_cast<std::size_t>(col.front().first);
  }
  return img;
}

std::string join(const std::vector<long>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

} // namespace

std::string DimReport::describe() const {
  return std::string(passed ? "equal " : "differ ") + join(lhs) + " vs " + join(rhs);
}

std::uint64_t chain_dim(const FiniteDimAlgebra& a, const Bimodule& m, int k) {
  if (k < 0) throw std::invalid_argument("chain_dim: negative level");
  unsigned __int128 d = m.dim();
  for (int i = 0; i < k; ++i) {
    d *= a.dim();
    if (d > std::numeric_limits<std::uint64_t>::max() / 2) throw ResourceError("chain_dim: overflow");
  }
  return static_cast<std::uint64_t>(d);
}

Index chain_index(const FiniteDimAlgebra& a, const Bimodule& m, std::size_t u, const std::vector<std::size_t>& as) {
  return encode(u, as, m.dim(), a.dim());
}

QVector bar_apply(const FiniteDimAlgebra& a, const Bimodule& m, int k, const QVector& chain) {
  if (k < 1) throw std::invalid_argument("bar_apply: level must be >= 1");
  const std::size_t dm = m.dim(), da = a.dim();
  std::map<Index, mpq_class> acc;
  for (const auto& [idx, coef] : chain) {
    const Chain c = decode(idx, dm, da, k);
    std::vector<std::size_t> rest(c.as.begin() + 1, c.as.end());
    for (const auto& [v, x] : m.right(c.u, c.as[0])) accumulate(acc, encode(v, rest, dm, da), coef * x);
    for (int i = 1; i < k; ++i) {
      std::vector<std::size_t> merged;
      merged.reserve(k - 1);
      for (int j = 0; j < k; ++j)
        if (j != i) merged.push_back(c.as[j]);
      const QVector& prod = a.product(c.as[i - 1], c.as[i]);
      const mpq_class sign = (i % 2) ? -1 : 1;
      for (const auto& [w, x] : prod) {
        merged[i - 1] = w;
        accumulate(acc, encode(c.u, merged, dm, da), sign * coef * x);
      }
    }
    std::vector<std::size_t> front(c.as.begin(), c.as.end() - 1);
    const mpq_class sign = (k % 2) ? -1 : 1;
    for (const auto& [v, x] : m.left(c.as[k - 1], c.u)) accumulate(acc, encode(v, front, dm, da), sign * coef * x);
  }
  return to_sparse(acc);
}

std::vector<QVector> bar_differential(const FiniteDimAlgebra& a, const Bimodule& m, int k, std::uint64_t cap) {
  if (k < 1) throw std::invalid_argument("bar_differential: level must be >= 1");
  const std::uint64_t cols = chain_dim(a, m, k);
  check_cap(chain_dim(a, m, k - 1), cols, cap, "bar_differential");
  std::vector<QVector> out(cols);
  for (Index j = 0; j < cols; ++j) out[j] = bar_apply(a, m, k, QVector{{j, mpq_class(1)}});
  return out;
}

std::vector<long> hh_dims(const FiniteDimAlgebra& a, const Bimodule& m, int max_level, std::uint64_t cap) {
  if (max_level < 0) throw std::invalid_argument("hh_dims: max_level must be >= 0");
  if (m.algebra_dim() != a.dim()) throw std::invalid_argument("hh_dims: bimodule does not match algebra");
  for (int k = 1; k <= max_level + 1; ++k) check_cap(chain_dim(a, m, k - 1), chain_dim(a, m, k), cap, "hh_dims");
  std::vector<long> rank(max_level + 3, 0);
  for (int k = 1; k <= max_level + 1; ++k) {
    const auto cols = bar_differential(a, m, k, cap);
    rank[k] = static_cast<long>(exact_rank(cols, chain_dim(a, m, k - 1)));
  }
  std::vector<long> dims(max_level + 1);
  for (int i = 0; i <= max_level; ++i)
    dims[i] = static_cast<long>(chain_dim(a, m, i)) - rank[i] - rank[i + 1];
  return dims;
}

DimReport verify_homolog_i(const FiniteDimAlgebra& a, const Bimodule& m, int n, int max_level, std::uint64_t cap) {
  if (n < 1) throw std::invalid_argument("verify_homolog_i: n must be >= 1");
  DimReport r;
  const FiniteDimAlgebra big = tensor_power(a, static_cast<std::size_t>(n));
  const Bimodule twisted = cyclic_twisted_bimodule(a, m, static_cast<std::size_t>(n));
  r.lhs = hh_dims(big, twisted, max_level, cap);
  r.rhs = hh_dims(a, m, max_level, cap);
  r.passed = r.lhs == r.rhs;
  return r;
}

QMatrix cyclic_shift(const FiniteDimAlgebra& a, int n) {
  if (n < 1) throw std::invalid_argument("cyclic_shift: n must be >= 1");
  std::vector<std::size_t> perm(n);
  for (int j = 0; j < n; ++j) perm[j] = static_cast<std::size_t>((j + n - 1) % n);
  return tensor_permutation(a, static_cast<std::size_t>(n), perm);
}

HomotopyReport homotopy_identity_check(const FiniteDimAlgebra& a, int n, int m, int trials, std::uint64_t seed,
                                       std::uint64_t cap) {
  if (n < 1 || m < 1 || trials < 0) throw std::invalid_argument("homotopy_identity_check: need n, m >= 1");
  const FiniteDimAlgebra b = tensor_power(a, static_cast<std::size_t>(n));
  const QMatrix sigma = cyclic_shift(a, n);
  const Bimodule mod = twisted_bimodule(b, sigma);
  const auto img = permutation_images(sigma);
  const std::size_t db = b.dim();
  const int k = m - 1;
  const std::uint64_t dim_k = chain_dim(b, mod, k);

  // Kernel basis of b_k (all of C_0 when k = 0).
  std::vector<QVector> kernel;
  if (k == 0) {
    for (Index j = 0; j < dim_k; ++j) kernel.push_back(QVector{{j, mpq_class(1)}});
  } else {
    const auto cols = bar_differential(b, mod, k, cap);
    Echelon<mpq_class> e(true);
    for (Index j = 0; j < cols.size(); ++j)
      if (auto rel = e.insert_tracked(cols[j], j)) kernel.push_back(std::move(*rel));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(1, 6);
  HomotopyReport report;
  report.trials = trials;
  if (kernel.empty()) {
    report.passed = true;
    return report;
  }
  std::uniform_int_distribution<std::size_t> pick(0, kernel.size() - 1);
  std::uniform_int_distribution<int> count(1, 6);

  for (int t = 0; t < trials; ++t) {
    QVector c;
    for (int r = count(rng); r > 0; --r) {
      int x = coeff(rng);
      x = x <= 3 ? x : 3 - x; // 1..3 or -1..-3
      axpy(c, mpq_class(x), kernel[pick(rng)]);
    }
    mpz_class den = 1;
    for (const auto& [i, x] : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    scale(c, mpq_class(den));

    bool ok = k == 0 || bar_apply(b, mod, k, c).empty();

    std::map<Index, mpq_class> lhs;
    std::map<Index, mpq_class> h;
    for (const auto& [idx, x] : c) {
      Chain ch = decode(idx, db, db, k);
      accumulate(lhs, idx, x);
      std::vector<std::size_t> shifted(ch.as.size());
      for (std::size_t j = 0; j < ch.as.size(); ++j) shifted[j] = img[ch.as[j]];
      accumulate(lhs, encode(img[ch.u], shifted, db, db), -x);

      // s^j(C) (x) 1 for j = 0..m-1; the matrix reads (a_1..a_k, u).
      std::vector<std::size_t> cols(ch.as);
      cols.push_back(ch.u);
      for (int j = 0; j < m; ++j) {
        const mpq_class sign = ((j * (m - 1)) % 2) ? -1 : 1;
        for (const auto& [e, y] : b.unit()) accumulate(h, encode(static_cast<std::size_t>(e), cols, db, db), sign * x * y);
        std::vector<std::size_t> next(cols.begin() + 1, cols.end());
        next.push_back(img[cols.front()]);
        cols = std::move(next);
      }
    }
    QVector rhs = bar_apply(b, mod, m, to_sparse(h));
    if (m % 2) scale(rhs, mpq_class(-1));
    if (to_sparse(lhs) != rhs) ok = false;
    if (!ok) ++report.failures;
  }
  report.passed = report.failures == 0;
  return report;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const std::vector<QMatrix>& group) {
  const std::size_t g = group.size();
  auto index_of = [&](const QMatrix& x) {
    for (std::size_t i = 0; i < g; ++i)
      if (group[i] == x) return i;
    throw std::invalid_argument("conjugacy_classes: set is not closed");
  };
  std::vector<std::size_t> inv(g);
  const QMatrix id = QMatrix::identity(group.front().size());
  for (std::size_t i = 0; i < g; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < g && !found; ++j)
      if (group[i] * group[j] == id) {
        inv[i] = j;
        found = true;
      }
    if (!found) throw std::invalid_argument("conjugacy_classes: missing inverse");
  }
  std::vector<int> cls(g, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < g; ++i) {
    if (cls[i] >= 0) continue;
    std::vector<std::size_t> members;
    for (std::size_t h = 0; h < g; ++h) {
      const std::size_t c = index_of(group[h] * group[i] * group[inv[h]]);
      if (cls[c] < 0) {
        cls[c] = static_cast<int>(out.size());
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<std::size_t> centralizer(const std::vector<QMatrix>& group, std::size_t g) {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < group.size(); ++h)
    if (group[h] * group[g] == group[g] * group[h]) out.push_back(h);
  return out;
}

std::vector<QVector> averaging_operator(const FiniteDimAlgebra& b, const Bimodule& m, const std::vector<QMatrix>& h,
                                        int k) {
  if (m.dim() != b.dim()) throw std::invalid_argument("averaging_operator: module must share the algebra basis");
  if (h.empty()) throw std::invalid_argument("averaging_operator: empty group");
  const std::size_t d = b.dim();
  const std::uint64_t dim_k = chain_dim(b, m, k);
  const std::vector<std::size_t> radices(k + 1, d);
  std::vector<std::vector<QVector>> cols(h.size(), std::vector<QVector>(d));
  for (std::size_t g = 0; g < h.size(); ++g)
    for (std::size_t j = 0; j < d; ++j) cols[g][j] = h[g].column(j);
  const mpq_class weight(1, static_cast<long>(h.size()));
  std::vector<QVector> out(dim_k);
  for (Index idx = 0; idx < dim_k; ++idx) {
    const auto slots = digits(idx, d, static_cast<std::size_t>(k + 1));
    QVector acc;
    for (std::size_t g = 0; g < h.size(); ++g) {
      std::vector<const QVector*> parts(k + 1);
      for (int s = 0; s <= k; ++s) parts[s] = &cols[g][slots[s]];
      axpy(acc, weight, tensor_expand(parts, radices));
    }
    out[idx] = std::move(acc);
  }
  return out;
}

std::vector<long> invariant_hh_dims(const FiniteDimAlgebra& b, const Bimodule& m, const std::vector<QMatrix>& h,
                                    int max_level, std::uint64_t cap) {
  if (max_level < 0) throw std::invalid_argument("invariant_hh_dims: max_level must be >= 0");
  for (int k = 0; k <= max_level + 1; ++k) check_cap(chain_dim(b, m, k), chain_dim(b, m, k), cap, "invariant_hh_dims");
  std::vector<long> rank_p(max_level + 2), rank_bp(max_level + 3, 0);
  for (int k = 0; k <= max_level + 1; ++k) {
    const auto p = averaging_operator(b, m, h, k);
    if (k <= max_level) rank_p[k] = static_cast<long>(exact_rank(p, chain_dim(b, m, k)));
    if (k >= 1) {
      std::vector<QVector> bp;
      bp.reserve(p.size());
      for (const auto& col : p) bp.push_back(col.empty() ? QVector{} : bar_apply(b, m, k, col));
      rank_bp[k] = static_cast<long>(exact_rank(bp, chain_dim(b, m, k - 1)));
    }
  }
  std::vector<long> dims(max_level + 1);
  for (int i = 0; i <= max_level; ++i) dims[i] = rank_p[i] - rank_bp[i] - rank_bp[i + 1];
  return dims;
}

DimReport afls_check(const FiniteDimAlgebra& b, int max_level, std::uint64_t cap) {
  if (!b.has_action()) throw std::invalid_argument("afls_check: algebra has no group action");
  const FiniteDimAlgebra d = crossed_product(b);
  DimReport r;
  r.lhs = hh_dims(d, regular_bimodule(d), max_level, cap);
  r.rhs.assign(max_level + 1, 0);
  const auto& group = b.group();
  for (const auto& cls : conjugacy_classes(group)) {
    const std::size_t g = cls.front();
    std::vector<QMatrix> z;
    for (std::size_t h : centralizer(group, g)) z.push_back(group[h]);
    const auto dims = invariant_hh_dims(b, twisted_bimodule(b, group[g]), z, max_level, cap);
    for (int i = 0; i <= max_level; ++i) r.rhs[i] += dims[i];
  }
  r.passed = r.lhs == r.rhs;
  return r;
}

} // namespace hhw
