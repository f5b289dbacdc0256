#include "hhw/finite_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hhw {

QVector tensor_expand(const std::vector<const QVector*>& parts, const std::vector<std::size_t>& radices) {
  QVector acc{{0, mpq_class(1)}};
  Index weight = 1;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    QVector next;
    next.reserve(acc.size() * parts[k]->size());
    for (const auto& [idx, c] : acc)
      for (const auto& [j, d] : *parts[k]) next.emplace_back(idx + weight * j, c * d);
    std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    acc = std::move(next);
    weight *= radices[k];
  }
  return acc;
}

namespace {

QVector basis_vector(Index i) { return QVector{{i, mpq_class(1)}}; }

void add_into(std::map<Index, mpq_class>& acc, const QVector& v, const mpq_class& c) {
  for (const auto& [k, x] : v) acc[k] += c * x;
}

} // namespace

std::vector<std::size_t> digits(Index index, std::size_t base, std::size_t count) {
  std::vector<std::size_t> d(count);
  for (std::size_t k = 0; k < count; ++k) {
    d[k] = static_cast<std::size_t>(index % base);
    index /= base;
  }
  return d;
}

Index from_digits(const std::vector<std::size_t>& d, std::size_t base) {
  Index idx = 0;
  for (std::size_t k = d.size(); k-- > 0;) idx = idx * base + d[k];
  return idx;
}

// ---- QMatrix ----

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::permutation(const std::vector<std::size_t>& images) {
  QMatrix m(images.size());
  for (std::size_t j = 0; j < images.size(); ++j) m(images[j], j) = 1;
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<mpq_class>& d) {
  QMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QVector QMatrix::column(std::size_t j) const {
  QVector v;
  for (std::size_t i = 0; i < n_; ++i)
    if (sgn((*this)(i, j)) != 0) v.emplace_back(i, (*this)(i, j));
  return v;
}

QVector QMatrix::apply(const QVector& v) const {
  std::map<Index, mpq_class> acc;
  for (const auto& [j, c] : v)
    for (std::size_t i = 0; i < n_; ++i)
      if (sgn((*this)(i, j)) != 0) acc[i] += (*this)(i, j) * c;
  return to_sparse(acc);
}

bool QMatrix::invert(QMatrix& out) const {
  const std::size_t n = n_;
  QMatrix a = *this;
  out = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a(piv, col)) == 0) ++piv;
    if (piv == n) return false;
    if (piv != col)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(piv, k), a(col, k));
        std::swap(out(piv, k), out(col, k));
      }
    const mpq_class inv = 1 / a(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      a(col, k) *= inv;
      out(col, k) *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const mpq_class f = a(r, col);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(col, k);
        out(r, k) -= f * out(col, k);
      }
    }
  }
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("QMatrix: size mismatch");
  QMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

// ---- FiniteDimAlgebra ----

FiniteDimAlgebra::FiniteDimAlgebra(std::string name, std::size_t dim, std::vector<QVector> products,
                                   QVector unit)
    : name_(std::move(name)), dim_(dim), products_(std::move(products)), unit_(std::move(unit)) {
  if (products_.size() != dim_ * dim_)
    throw std::invalid_argument("FiniteDimAlgebra: expected dim^2 structure vectors");
}

QVector FiniteDimAlgebra::multiply(const QVector& a, const QVector& b) const {
  std::map<Index, mpq_class> acc;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) add_into(acc, product(i, j), x * y);
  return to_sparse(acc);
}

void FiniteDimAlgebra::validate() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    const QVector ei = basis_vector(i);
    if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei)
      throw std::invalid_argument(name_ + ": unit law fails");
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const QVector ek = basis_vector(k);
        if (multiply(product(i, j), ek) != multiply(ei, product(j, k)))
          throw std::invalid_argument(name_ + ": associativity fails");
      }
  }
}

int FiniteDimAlgebra::group_index(const QMatrix& g) const {
  for (std::size_t k = 0; k < group_.size(); ++k)
    if (group_[k] == g) return static_cast<int>(k);
  return -1;
}

FiniteDimAlgebra FiniteDimAlgebra::with_action(std::vector<QMatrix> group) const {
  FiniteDimAlgebra out = *this;
  out.group_ = std::move(group);
  for (const QMatrix& g : out.group_) {
    if (g.size() != dim_) throw std::invalid_argument(name_ + ": action matrix has wrong size");
    if (g.apply(unit_) != unit_) throw std::invalid_argument(name_ + ": action does not fix the unit");
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (g.apply(product(i, j)) != multiply(g.column(i), g.column(j)))
          throw std::invalid_argument(name_ + ": action is not multiplicative");
  }
  if (out.group_index(QMatrix::identity(dim_)) < 0)
    throw std::invalid_argument(name_ + ": group must contain the identity");
  for (const QMatrix& g : out.group_)
    for (const QMatrix& h : out.group_)
      if (out.group_index(g * h) < 0) throw std::invalid_argument(name_ + ": group is not closed");
  return out;
}

// ---- Bimodule ----

Bimodule::Bimodule(std::string name, std::size_t algebra_dim, std::size_t dim, std::vector<QVector> left,
                   std::vector<QVector> right)
    : name_(std::move(name)), alg_dim_(algebra_dim), dim_(dim), left_(std::move(left)),
      right_(std::move(right)) {
  if (left_.size() != alg_dim_ * dim_ || right_.size() != alg_dim_ * dim_)
    throw std::invalid_argument("Bimodule: action tables have the wrong size");
}

void Bimodule::validate(const FiniteDimAlgebra& a) const {
  if (a.dim() != alg_dim_) throw std::invalid_argument(name_ + ": algebra dimension mismatch");
  auto act_left = [&](std::size_t i, const QVector& m) {
    std::map<Index, mpq_class> acc;
    for (const auto& [u, c] : m) add_into(acc, left(i, u), c);
    return to_sparse(acc);
  };
  auto act_right = [&](const QVector& m, std::size_t i) {
    std::map<Index, mpq_class> acc;
    for (const auto& [u, c] : m) add_into(acc, right(u, i), c);
    return to_sparse(acc);
  };
  auto act_left_vec = [&](const QVector& a_vec, const QVector& m) {
    std::map<Index, mpq_class> acc;
    for (const auto& [i, c] : a_vec) add_into(acc, act_left(i, m), c);
    return to_sparse(acc);
  };
  auto act_right_vec = [&](const QVector& m, const QVector& a_vec) {
    std::map<Index, mpq_class> acc;
    for (const auto& [i, c] : a_vec) add_into(acc, act_right(m, i), c);
    return to_sparse(acc);
  };
  for (std::size_t u = 0; u < dim_; ++u) {
    const QVector mu = basis_vector(u);
    if (act_left_vec(a.unit(), mu) != mu || act_right_vec(mu, a.unit()) != mu)
      throw std::invalid_argument(name_ + ": unit does not act trivially");
    for (std::size_t i = 0; i < alg_dim_; ++i)
      for (std::size_t j = 0; j < alg_dim_; ++j) {
        if (act_left_vec(a.product(i, j), mu) != act_left(i, act_left(j, mu)))
          throw std::invalid_argument(name_ + ": left action is not associative");
        if (act_right_vec(mu, a.product(i, j)) != act_right(act_right(mu, i), j))
          throw std::invalid_argument(name_ + ": right action is not associative");
        if (act_right(act_left(i, mu), j) != act_left(i, act_right(mu, j)))
          throw std::invalid_argument(name_ + ": left and right actions do not commute");
      }
  }
}

// ---- catalog ----

FiniteDimAlgebra ground_field() {
  return FiniteDimAlgebra("Q", 1, {basis_vector(0)}, basis_vector(0));
}

FiniteDimAlgebra truncated_polynomial(std::size_t k) {
  if (k == 0) throw std::invalid_argument("truncated_polynomial: k must be >= 1");
  std::vector<QVector> prod(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i + j < k) prod[i * k + j] = basis_vector(i + j);
  return FiniteDimAlgebra("Q[x]/(x^" + std::to_string(k) + ")", k, std::move(prod), basis_vector(0));
}

FiniteDimAlgebra cyclic_group_algebra(std::size_t m) {
  if (m == 0) throw std::invalid_argument("cyclic_group_algebra: m must be >= 1");
  std::vector<QVector> prod(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i * m + j] = basis_vector((i + j) % m);
  return FiniteDimAlgebra("Q[Z" + std::to_string(m) + "]", m, std::move(prod), basis_vector(0));
}

FiniteDimAlgebra tensor_power(const FiniteDimAlgebra& a, std::size_t n) {
  if (n == 0) return ground_field();
  const std::size_t d = a.dim();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= d;
  const std::vector<std::size_t> radices(n, d);
  std::vector<QVector> prod(total * total);
  for (std::size_t i = 0; i < total; ++i) {
    const auto di = digits(i, d, n);
    for (std::size_t j = 0; j < total; ++j) {
      const auto dj = digits(j, d, n);
      std::vector<const QVector*> parts(n);
      for (std::size_t k = 0; k < n; ++k) parts[k] = &a.product(di[k], dj[k]);
      prod[i * total + j] = tensor_expand(parts, radices);
    }
  }
  std::vector<const QVector*> units(n, &a.unit());
  return FiniteDimAlgebra(a.name() + "^(x)" + std::to_string(n), total, std::move(prod),
                          tensor_expand(units, radices));
}

FiniteDimAlgebra crossed_product(const FiniteDimAlgebra& b) {
  if (!b.has_action()) throw std::invalid_argument("crossed_product: algebra has no group action");
  const auto& group = b.group();
  const std::size_t d = b.dim();
  const std::size_t g = group.size();
  const std::size_t total = d * g;
  std::vector<QVector> prod(total * total);
  for (std::size_t gi = 0; gi < g; ++gi)
    for (std::size_t hi = 0; hi < g; ++hi) {
      const int gh = b.group_index(group[gi] * group[hi]);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          // (e_i # g)(e_j # h) = e_i g(e_j) # gh
          const QVector bc = b.multiply(basis_vector(i), group[gi].column(j));
          QVector out;
          for (const auto& [k, c] : bc) out.emplace_back(k + d * static_cast<std::size_t>(gh), c);
          prod[(i + d * gi) * total + (j + d * hi)] = std::move(out);
        }
    }
  const int e = b.group_index(QMatrix::identity(d));
  QVector unit;
  for (const auto& [k, c] : b.unit()) unit.emplace_back(k + d * static_cast<std::size_t>(e), c);
  std::sort(unit.begin(), unit.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return FiniteDimAlgebra("Q[G]x|" + b.name(), total, std::move(prod), std::move(unit));
}

FiniteDimAlgebra change_basis(const FiniteDimAlgebra& a, const QMatrix& p) {
  QMatrix pinv;
  if (!p.invert(pinv)) throw std::invalid_argument("change_basis: matrix is singular");
  const std::size_t d = a.dim();
  std::vector<QVector> prod(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prod[i * d + j] = pinv.apply(a.multiply(p.column(i), p.column(j)));
  return FiniteDimAlgebra(a.name() + "'", d, std::move(prod), pinv.apply(a.unit()));
}

QMatrix tensor_permutation(const FiniteDimAlgebra& a, std::size_t n, const std::vector<std::size_t>& perm) {
  const std::size_t d = a.dim();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= d;
  std::vector<std::size_t> images(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto di = digits(idx, d, n);
    std::vector<std::size_t> out(n);
    for (std::size_t j = 0; j < n; ++j) out[perm[j]] = di[j];
    images[idx] = static_cast<std::size_t>(from_digits(out, d));
  }
  return QMatrix::permutation(images);
}

QMatrix tensor_power_matrix(const QMatrix& g, std::size_t n) {
  const std::size_t d = g.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= d;
  const std::vector<std::size_t> radices(n, d);
  std::vector<QVector> cols(d);
  for (std::size_t j = 0; j < d; ++j) cols[j] = g.column(j);
  QMatrix out(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto di = digits(idx, d, n);
    std::vector<const QVector*> parts(n);
    for (std::size_t k = 0; k < n; ++k) parts[k] = &cols[di[k]];
    for (const auto& [r, c] : tensor_expand(parts, radices)) out(r, idx) = c;
  }
  return out;
}

std::vector<QMatrix> symmetric_group_action(const FiniteDimAlgebra& a, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<QMatrix> out;
  do {
    out.push_back(tensor_permutation(a, n, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Bimodule regular_bimodule(const FiniteDimAlgebra& a) {
  const std::size_t d = a.dim();
  std::vector<QVector> left(d * d), right(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t u = 0; u < d; ++u) {
      left[i * d + u] = a.product(i, u);
      right[u * d + i] = a.product(u, i);
    }
  return Bimodule(a.name(), d, d, std::move(left), std::move(right));
}

Bimodule twisted_bimodule(const FiniteDimAlgebra& a, const QMatrix& g) {
  const std::size_t d = a.dim();
  std::vector<QVector> left(d * d), right(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const QVector gi = g.column(i);
    for (std::size_t u = 0; u < d; ++u) {
      left[i * d + u] = a.product(i, u);
      right[u * d + i] = a.multiply(basis_vector(u), gi);
    }
  }
  return Bimodule(a.name() + "_g", d, d, std::move(left), std::move(right));
}

Bimodule cyclic_twisted_bimodule(const FiniteDimAlgebra& a, const Bimodule& m, std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_twisted_bimodule: n must be >= 1");
  if (m.algebra_dim() != a.dim()) throw std::invalid_argument("cyclic_twisted_bimodule: module mismatch");
  const std::size_t d = a.dim();
  std::size_t alg_total = 1;
  for (std::size_t k = 0; k < n; ++k) alg_total *= d;
  const std::size_t mod_total = alg_total / d * m.dim();

  std::vector<std::size_t> radices(n, d);
  radices[n - 1] = m.dim();

  std::vector<QVector> left(alg_total * mod_total), right(alg_total * mod_total);
  for (std::size_t u = 0; u < mod_total; ++u) {
    const auto bd = digits(u % (alg_total / d), d, n - 1);
    const std::size_t mu = u / (alg_total / d);
    for (std::size_t i = 0; i < alg_total; ++i) {
      const auto ai = digits(i, d, n);
      std::vector<const QVector*> lp(n), rp(n);
      // left: a_j b_j for j < n-1, a_{n-1} . m
      for (std::size_t j = 0; j + 1 < n; ++j) lp[j] = &a.product(ai[j], bd[j]);
      lp[n - 1] = &m.left(ai[n - 1], mu);
      // right: b_j c_{j+1} for j < n-1, m . c_0
      for (std::size_t j = 0; j + 1 < n; ++j) rp[j] = &a.product(bd[j], ai[j + 1]);
      rp[n - 1] = &m.right(mu, ai[0]);
      left[i * mod_total + u] = tensor_expand(lp, radices);
      right[u * alg_total + i] = tensor_expand(rp, radices);
    }
  }
  return Bimodule("(" + a.name() + "^(n-1)(x)" + m.name() + ")_sigma", alg_total, mod_total, std::move(left),
                  std::move(right));
}

} // namespace hhw
