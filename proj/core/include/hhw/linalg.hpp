#pragma once

// Sparse exact linear algebra over a field F (mpq_class or RationalFunction).
// Vectors are sorted (index, value) lists without zero entries.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hhw {

using Index = std::uint64_t;

template <class F>
using SparseVector = std::vector<std::pair<Index, F>>;

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }

/// Builds a canonical sparse vector from an index -> value map, dropping zeros.
template <class F>
SparseVector<F> to_sparse(const std::map<Index, F>& m) {
  SparseVector<F> out;
  out.reserve(m.size());
  for (const auto& [k, v] : m)
    if (!is_zero(v)) out.emplace_back(k, v);
  return out;
}

/// y := y + c x
template <class F>
void axpy(SparseVector<F>& y, const F& c, const SparseVector<F>& x) {
  if (is_zero(c) || x.empty()) return;
  SparseVector<F> out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, c * x[j].second);
      ++j;
    } else {
      F v = y[i].second + c * x[j].second;
      if (!is_zero(v)) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

template <class F>
void scale(SparseVector<F>& y, const F& c) {
  for (auto& [k, v] : y) v *= c;
}

/// Row-echelon basis built incrementally. Each stored row has a distinct
/// leading index with leading coefficient 1. Optionally tracks, for every
/// stored row, its expression in terms of the inserted vectors' labels.
template <class F>
class Echelon {
public:
  explicit Echelon(bool track = false) : track_(track) {}

  /// Reduces v; returns true (and stores it) if it was independent.
  bool insert(SparseVector<F> v) { return insert_impl(std::move(v), {}).has_value() == false; }

  /// Tracked insert. `label` names the inserted vector. Returns the kernel
  /// relation (a combination of labels) if v was dependent, std::nullopt if
  /// it was stored as a new pivot.
  std::optional<SparseVector<F>> insert_tracked(SparseVector<F> v, Index label) {
    SparseVector<F> combo{{label, F(1)}};
    return insert_impl(std::move(v), std::move(combo));
  }

  /// Reduces v against the current basis without storing it.
  SparseVector<F> reduce(SparseVector<F> v) const {
    SparseVector<F> dummy;
    reduce_impl(v, dummy, false);
    return v;
  }

  /// If v lies in the span, returns v's label minus its expression in the
  /// stored rows' labels (a kernel relation). Requires tracking.
  std::optional<SparseVector<F>> relation(SparseVector<F> v, Index label) const {
    SparseVector<F> combo{{label, F(1)}};
    reduce_impl(v, combo, true);
    if (!v.empty()) return std::nullopt;
    return combo;
  }

  bool contains(const SparseVector<F>& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }

private:
  struct Row {
    SparseVector<F> vec;
    SparseVector<F> combo;
  };

  void reduce_impl(SparseVector<F>& v, SparseVector<F>& combo, bool track) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = rows_.find(v[pos].first);
      if (it == rows_.end()) {
        ++pos;
        continue;
      }
      const F c = -v[pos].second;
      axpy(v, c, it->second.vec);
      if (track) axpy(combo, c, it->second.combo);
      // Entries before pos are untouched: pivot rows start at their lead.
    }
  }

  std::optional<SparseVector<F>> insert_impl(SparseVector<F> v, SparseVector<F> combo) {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = rows_.find(v[pos].first);
      if (it == rows_.end()) break;
      const F c = -v[pos].second;
      axpy(v, c, it->second.vec);
      if (track_) axpy(combo, c, it->second.combo);
    }
    if (v.empty()) return combo;
    const F inv = F(1) / v.front().second;
    scale(v, inv);
    if (track_) scale(combo, inv);
    const Index lead = v.front().first;
    rows_.emplace(lead, Row{std::move(v), std::move(combo)});
    return std::nullopt;
  }

  bool track_;
  std::map<Index, Row> rows_;
};

/// Rank of a list of vectors over the field F.
template <class F>
std::size_t rank_of(std::span<const SparseVector<F>> vectors) {
  Echelon<F> e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

/// Transposes a list of columns into a list of rows.
template <class F>
std::vector<SparseVector<F>> transpose(std::span<const SparseVector<F>> columns, std::size_t nrows) {
  std::vector<SparseVector<F>> rows(nrows);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) rows[r].emplace_back(static_cast<Index>(c), v);
  return rows;
}

/// Fraction-free rank over Q: vectors are scaled to primitive integer
/// vectors and eliminated with integer row operations, dividing out the
/// content after every step.
class IntegerEchelon {
public:
  bool insert(const SparseVector<mpq_class>& v);
  bool insert(SparseVector<mpz_class> v);
  std::size_t rank() const { return rows_.size(); }

private:
  std::map<Index, SparseVector<mpz_class>> rows_;
};

/// Rank of a rational matrix given by columns, via IntegerEchelon. Eliminates
/// whichever of rows/columns is the smaller set.
std::size_t exact_rank(std::span<const SparseVector<mpq_class>> columns, std::size_t nrows);

} // namespace hhw
