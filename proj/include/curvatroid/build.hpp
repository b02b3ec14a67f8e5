// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

#include "curvatroid/catalog.hpp"
#include "curvatroid/matroid.hpp"
#include "curvatroid/spec.hpp"

namespace curvatroid {

namespace detail {

// Enumeration filters every k-subset; keep it at desk scale.
inline constexpr int kMaxEnumeratedGround = 40;

inline void check_enumerable(int n) {
  if (n > kMaxEnumeratedGround) {
    throw Error(ErrorCode::kTooLarge, "basis enumeration is limited to " +
                                          std::to_string(kMaxEnumeratedGround) + " elements");
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// False when x and y were already joined.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : std::to_string(i));
  }
  return labels;
}

/// Rank of the given columns, by exact Gaussian elimination.
inline int column_rank(const std::vector<std::vector<Rational>>& matrix, ElementSet columns) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(matrix.size());
  for (const auto& full_row : matrix) {
    std::vector<Rational> row;
    for (Element c : columns) row.push_back(full_row[static_cast<std::size_t>(c)]);
    rows.push_back(std::move(row));
  }
  const std::size_t width = static_cast<std::size_t>(columns.size());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < width; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

inline Matroid build(const ExplicitSpec& spec) {
  if (spec.bases.empty()) throw Error(ErrorCode::kEmptyBasisFamily, "explicit basis list is empty");
  // Labels have to resolve before the Matroid exists, so index them here.
  std::unordered_map<std::string, Element> index;
  for (std::size_t i = 0; i < spec.ground.size(); ++i) index.emplace(spec.ground[i], static_cast<Element>(i));
  std::vector<BasisSet> bases;
  for (const auto& names : spec.bases) {
    if (names.size() != spec.bases.front().size()) {
      throw Error(ErrorCode::kRankMismatch, "explicit bases of sizes " + std::to_string(spec.bases.front().size()) +
                                                " and " + std::to_string(names.size()));
    }
    BasisSet b;
    for (const auto& name : names) {
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorCode::kUnknownElement, "basis uses unknown element '" + name + "'");
      if (b.contains(it->second)) throw Error(ErrorCode::kInvalidSpec, "basis repeats element '" + name + "'");
      b = b.with(it->second);
    }
    bases.push_back(b);
  }
  return Matroid(spec.ground, std::move(bases), "explicit");
}

inline Matroid build(const UniformSpec& spec) {
  if (spec.k < 1 || spec.k > spec.n) {
    throw Error(ErrorCode::kInvalidRank, "uniform matroid needs 1 <= k <= n, got k=" + std::to_string(spec.k) +
                                             " n=" + std::to_string(spec.n));
  }
  check_enumerable(spec.n);
  std::vector<BasisSet> bases;
  for_each_k_subset(spec.n, spec.k, [&](ElementSet s) { bases.push_back(s); });
  return Matroid(default_labels(spec.n), std::move(bases),
                 "uniform(n=" + std::to_string(spec.n) + ",k=" + std::to_string(spec.k) + ")");
}

inline Matroid build(const GraphicSpec& spec) {
  if (spec.edges.empty()) throw Error(ErrorCode::kDegenerateGraph, "graph has no edges");
  if (spec.vertices < 1) throw Error(ErrorCode::kInvalidSpec, "graph needs at least one vertex");
  const int n = static_cast<int>(spec.edges.size());
  check_enumerable(n);
  std::vector<std::string> labels;
  UnionFind components(spec.vertices);
  int component_count = spec.vertices;
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const auto& e = spec.edges[i];
    if (e.u < 0 || e.v < 0 || e.u >= spec.vertices || e.v >= spec.vertices) {
      throw Error(ErrorCode::kInvalidSpec, "edge endpoint out of range in edge " + std::to_string(i));
    }
    if (components.unite(e.u, e.v)) --component_count;
    labels.push_back(e.label.empty() ? std::to_string(i) : e.label);
  }
  const int k = spec.vertices - component_count;
  if (k == 0) throw Error(ErrorCode::kDegenerateGraph, "graph has only loops");
  std::vector<BasisSet> bases;
  for_each_k_subset(n, k, [&](ElementSet s) {
    UnionFind forest(spec.vertices);
    for (Element e : s) {
      if (!forest.unite(spec.edges[e].u, spec.edges[e].v)) return;
    }
    bases.push_back(s);
  });
  return Matroid(std::move(labels), std::move(bases),
                 "graphic(vertices=" + std::to_string(spec.vertices) + ",edges=" + std::to_string(n) + ")");
}

inline Matroid build(const LinearSpec& spec) {
  if (spec.matrix.empty() || spec.matrix.front().empty()) {
    throw Error(ErrorCode::kInvalidSpec, "matrix needs at least one row and one column");
  }
  const std::size_t cols = spec.matrix.front().size();
  for (const auto& row : spec.matrix) {
    if (row.size() != cols) throw Error(ErrorCode::kInvalidSpec, "matrix rows have different lengths");
  }
  if (!spec.labels.empty() && spec.labels.size() != cols) {
    throw Error(ErrorCode::kInvalidSpec, "expected " + std::to_string(cols) + " column labels");
  }
  const int n = static_cast<int>(cols);
  check_enumerable(n);
  const int k = column_rank(spec.matrix, ElementSet::prefix(n));
  if (k == 0) throw Error(ErrorCode::kInvalidRank, "matrix has rank 0");
  std::vector<BasisSet> bases;
  for_each_k_subset(n, k, [&](ElementSet s) {
    if (column_rank(spec.matrix, s) == k) bases.push_back(s);
  });
  return Matroid(spec.labels.empty() ? default_labels(n) : spec.labels, std::move(bases),
                 "linear(rows=" + std::to_string(spec.matrix.size()) + ",cols=" + std::to_string(n) + ")");
}

}  // namespace detail

inline Matroid build_matroid(const MatroidSpec& spec) {
  return std::visit(
      [](const auto& s) -> Matroid {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, NamedSpec>) {
          const MatroidSpec inner = catalog::lookup(s.key);
          Matroid m = std::visit([](const auto& x) -> Matroid {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, NamedSpec>) {
              throw Error(ErrorCode::kInvalidSpec, "catalog entries cannot be aliases");
            } else {
              return detail::build(x);
            }
          }, inner);
          return Matroid(m.labels(), {m.bases().begin(), m.bases().end()}, "named:" + s.key);
        } else {
          return detail::build(s);
        }
      },
      spec);
}

}  // namespace curvatroid
