#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ficat/field.hpp"

namespace ficat {

// Sparse vector: (index, nonzero value), strictly increasing indices.
template <class Ops>
using SparseVec = std::vector<std::pair<std::uint32_t, typename Ops::E>>;

// x + c * y.
template <class Ops>
SparseVec<Ops> axpy(const Ops& ops, const SparseVec<Ops>& x, const typename Ops::E& c, const SparseVec<Ops>& y) {
  SparseVec<Ops> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      auto v = ops.mul(c, y[j].second);
      if (!ops.is_zero(v)) out.emplace_back(y[j].first, v);
      ++j;
    } else {
      auto v = ops.add(x[i].second, ops.mul(c, y[j].second));
      if (!ops.is_zero(v)) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

// Builds a sparse vector from unordered (index, value) terms, summing repeats.
template <class Ops>
SparseVec<Ops> collect(const Ops& ops, std::vector<std::pair<std::uint32_t, typename Ops::E>> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<Ops> out;
  for (auto& [i, v] : terms) {
    if (!out.empty() && out.back().first == i) {
      out.back().second = ops.add(out.back().second, v);
      if (ops.is_zero(out.back().second)) out.pop_back();
    } else if (!ops.is_zero(v)) {
      out.emplace_back(i, std::move(v));
    }
  }
  return out;
}

/**
 * Incremental row echelon form. Each stored row has leading (smallest) index
 * equal to its pivot and leading coefficient 1. With tracking enabled, every
 * inserted vector carries a label and vectors that reduce to zero yield kernel
 * combinations of labels.
 */
template <class Ops>
class Echelon {
 public:
  explicit Echelon(Ops ops, bool track = false) : ops_(std::move(ops)), track_(track) {}

  SparseVec<Ops> reduce(SparseVec<Ops> v) const {
    SparseVec<Ops> dummy;
    reduce_impl(v, dummy, false);
    return v;
  }

  // Returns true if v was independent of the stored rows.
  bool insert(SparseVec<Ops> v, std::uint32_t label = 0) {
    SparseVec<Ops> combo;
    if (track_) combo.emplace_back(label, ops_.one());
    reduce_impl(v, combo, track_);
    if (v.empty()) {
      if (track_) kernel_.push_back(std::move(combo));
      return false;
    }
    auto s = ops_.inv(v.front().second);
    for (auto& [i, x] : v) x = ops_.mul(s, x);
    if (track_)
      for (auto& [i, x] : combo) x = ops_.mul(s, x);
    pivot_[v.front().first] = rows_.size();
    rows_.push_back(std::move(v));
    if (track_) combos_.push_back(std::move(combo));
    return true;
  }

  bool contains(const SparseVec<Ops>& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec<Ops>>& rows() const { return rows_; }
  const std::vector<SparseVec<Ops>>& kernel() const { return kernel_; }
  std::vector<std::uint32_t> pivots() const {
    std::vector<std::uint32_t> out;
    for (const auto& r : rows_) out.push_back(r.front().first);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void reduce_impl(SparseVec<Ops>& v, SparseVec<Ops>& combo, bool track) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = pivot_.find(v[pos].first);
      if (it == pivot_.end()) {
        ++pos;
        continue;
      }
      auto c = ops_.neg(v[pos].second);
      v = axpy(ops_, v, c, rows_[it->second]);
      if (track) combo = axpy(ops_, combo, c, combos_[it->second]);
    }
  }

  Ops ops_;
  bool track_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_;
  std::vector<SparseVec<Ops>> rows_;
  std::vector<SparseVec<Ops>> combos_;
  std::vector<SparseVec<Ops>> kernel_;
};

// Rank of the span of the given vectors.
template <class Ops>
std::size_t rank_of(const Ops& ops, const std::vector<SparseVec<Ops>>& vecs) {
  Echelon<Ops> e(ops);
  for (const auto& v : vecs) e.insert(v);
  return e.rank();
}

}  // namespace ficat
