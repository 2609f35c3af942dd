#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtwist/scalar.hpp"

namespace qtwist {

using Column = std::uint64_t;

/// Sparse vector: (column, value) pairs with strictly increasing columns and no zeros.
template <Field F>
using SparseVec = std::vector<std::pair<Column, F>>;

/// Builds a canonical sparse vector from unsorted entries, merging duplicates.
template <Field F>
SparseVec<F> make_sparse(std::vector<std::pair<Column, F>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<F> out;
  for (auto& [c, v] : entries) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, std::move(v));
    if (out.back().second.is_zero()) out.pop_back();
  }
  return out;
}

/// y := y + a*x.
template <Field F>
void axpy(SparseVec<F>& y, const F& a, const SparseVec<F>& x) {
  SparseVec<F> out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      F v = iy->second + a * ix->second;
      if (!v.is_zero()) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

template <Field F>
void scale(SparseVec<F>& v, const F& a) {
  for (auto& e : v) e.second = e.second * a;
}

/// Incremental semi-echelon basis of a subspace. Each stored row has its largest
/// column as pivot with coefficient 1, and no two rows share a pivot.
template <Field F>
class EchelonBasis {
 public:
  /// Inserts a vector; returns true if it enlarged the span.
  bool add(SparseVec<F> v) {
    while (!v.empty()) {
      auto it = rows_.find(v.back().first);
      if (it == rows_.end()) break;
      F c = v.back().second;
      axpy(v, -c, it->second);
    }
    if (v.empty()) return false;
    F inv = v.back().second.inverse();
    scale(v, inv);
    Column p = v.back().first;
    rows_.emplace(p, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(Column c) const { return rows_.count(c) != 0; }

  /// Unique representative of v modulo the span, supported on non-pivot columns.
  SparseVec<F> normal_form(SparseVec<F> v) const {
    SparseVec<F> kept;  // collected in decreasing column order
    while (!v.empty()) {
      auto it = rows_.find(v.back().first);
      if (it == rows_.end()) {
        kept.push_back(std::move(v.back()));
        v.pop_back();
      } else {
        F c = v.back().second;
        axpy(v, -c, it->second);
      }
    }
    std::reverse(kept.begin(), kept.end());
    return kept;
  }

  bool contains(const SparseVec<F>& v) const { return normal_form(v).empty(); }

  /// Fully reduced echelon basis ordered by increasing pivot column.
  std::vector<SparseVec<F>> reduced_rows() const {
    std::vector<Column> pivots;
    pivots.reserve(rows_.size());
    for (const auto& kv : rows_) pivots.push_back(kv.first);
    std::sort(pivots.begin(), pivots.end());
    std::vector<SparseVec<F>> out;
    out.reserve(pivots.size());
    for (Column p : pivots) {
      SparseVec<F> tail = rows_.at(p);
      tail.pop_back();
      SparseVec<F> r = normal_form(std::move(tail));
      r.emplace_back(p, F(1));
      out.push_back(std::move(r));
    }
    return out;
  }

  std::vector<Column> pivots() const {
    std::vector<Column> p;
    for (const auto& kv : rows_) p.push_back(kv.first);
    std::sort(p.begin(), p.end());
    return p;
  }

 private:
  std::unordered_map<Column, SparseVec<F>> rows_;
};

/// Reduced row echelon form of the span of `rows` (pivot = largest column).
template <Field F>
std::vector<SparseVec<F>> row_reduce(const std::vector<SparseVec<F>>& rows) {
  EchelonBasis<F> b;
  for (const auto& r : rows) b.add(r);
  return b.reduced_rows();
}

/// Basis of the annihilator {f : f(r) = 0 for all r} inside a space of dimension `dim`
/// under the standard pairing; returned reduced.
template <Field F>
std::vector<SparseVec<F>> orthogonal_complement(const std::vector<SparseVec<F>>& rows, Column dim) {
  std::vector<SparseVec<F>> reduced = row_reduce(rows);
  std::unordered_map<Column, const SparseVec<F>*> by_pivot;
  for (const auto& r : reduced) by_pivot[r.back().first] = &r;
  std::vector<std::vector<std::pair<Column, F>>> cols(dim);
  for (const auto& r : reduced) {
    Column p = r.back().first;
    for (std::size_t k = 0; k + 1 < r.size(); ++k) cols[r[k].first].emplace_back(p, -r[k].second);
  }
  std::vector<SparseVec<F>> out;
  for (Column c = 0; c < dim; ++c) {
    if (by_pivot.count(c)) continue;
    auto entries = cols[c];
    entries.emplace_back(c, F(1));
    out.push_back(make_sparse<F>(std::move(entries)));
  }
  return row_reduce(out);
}

}  // namespace qtwist
