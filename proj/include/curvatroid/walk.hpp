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

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "curvatroid/matroid.hpp"
#include "curvatroid/rational.hpp"

namespace curvatroid {

/// Finitely supported probability measure over bases, keyed in canonical order.
class Distribution {
 public:
  using Map = std::map<BasisSet, Rational>;

  Distribution() = default;

  static Distribution point_mass(BasisSet b) {
    Distribution d;
    d.add(b, Rational(1));
    return d;
  }

  /// Accumulates mass on b; repeated keys are summed.
  void add(BasisSet b, const Rational& mass) { mass_[b] += mass; }

  Rational mass(BasisSet b) const {
    auto it = mass_.find(b);
    return it == mass_.end() ? Rational(0) : it->second;
  }

  Rational total() const {
    Rational sum = 0;
    for (const auto& [b, m] : mass_) sum += m;
    return sum;
  }

  std::vector<BasisSet> support() const {
    std::vector<BasisSet> out;
    out.reserve(mass_.size());
    for (const auto& [b, m] : mass_) out.push_back(b);
    return out;
  }

  std::size_t size() const { return mass_.size(); }
  Map::const_iterator begin() const { return mass_.begin(); }
  Map::const_iterator end() const { return mass_.end(); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  Map mass_;
};

/// P(s, .) of the down-up walk: drop a uniform u in s, then add a uniform
/// x in N(s - u).
inline Distribution transition_distribution(const Matroid& m, BasisSet s) {
  if (!m.contains_basis(s)) throw Error(ErrorCode::kNotABasis, m.format(s) + " is not a basis");
  Distribution out;
  const int k = m.rank();
  for (Element u : s) {
    const ElementSet options = exchange_neighborhood(m, s, u);
    const Rational step(1, k * options.size());
    for (Element x : options) out.add(s.exchange(u, x), step);
  }
  return out;
}

/// The basis-exchange graph: bases adjacent iff |X xor Y| = 2.
class BasisGraph {
 public:
  explicit BasisGraph(const Matroid& m)
      : vertices_(m.bases().begin(), m.bases().end()), adjacency_(vertices_.size()) {
    index_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], static_cast<std::uint32_t>(i));
    for (const auto& [a, b] : adjacent_basis_pairs(m)) {
      const auto ia = index_.at(a);
      const auto ib = index_.at(b);
      adjacency_[ia].push_back(ib);
      adjacency_[ib].push_back(ia);
    }
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::span<const BasisSet> vertices() const { return vertices_; }
  BasisSet vertex(std::size_t i) const { return vertices_[i]; }
  std::span<const std::uint32_t> neighbors(std::size_t i) const { return adjacency_[i]; }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adjacency_) twice += a.size();
    return twice / 2;
  }

  std::size_t index_of(BasisSet b) const {
    auto it = index_.find(b);
    if (it == index_.end()) throw Error(ErrorCode::kNotABasis, "not a vertex of the basis graph");
    return it->second;
  }

  /// Hop distances from one vertex; -1 marks unreachable vertices.
  std::vector<int> distances_from(std::size_t source) const {
    std::vector<int> dist(vertices_.size(), -1);
    std::vector<std::uint32_t> queue;
    queue.reserve(vertices_.size());
    dist[source] = 0;
    queue.push_back(static_cast<std::uint32_t>(source));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto v = queue[head];
      for (auto w : adjacency_[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

 private:
  std::vector<BasisSet> vertices_;
  std::unordered_map<BasisSet, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Shortest-path distance in the basis graph, by BFS. Self-loops do not exist
/// in the graph, so d(x, x) = 0.
inline int basis_distance(const BasisGraph& g, BasisSet x, BasisSet y) {
  if (x == y) {
    g.index_of(x);
    return 0;
  }
  return g.distances_from(g.index_of(x))[g.index_of(y)];
}

/// One BFS row per source, indexed by the graph's vertex order.
inline std::vector<std::vector<int>> distance_matrix(const BasisGraph& g, std::span<const BasisSet> sources) {
  std::vector<std::vector<int>> rows;
  rows.reserve(sources.size());
  for (BasisSet s : sources) rows.push_back(g.distances_from(g.index_of(s)));
  return rows;
}

/// Distance lookups for transport costs.
///
/// Construction runs BFS from every basis and compares each distance with
/// |X \ Y|. When all agree the set-difference formula answers queries;
/// otherwise the full BFS table is kept.
class DistanceOracle {
 public:
  explicit DistanceOracle(const Matroid& m) : graph_(m) {
    const std::size_t count = graph_.vertex_count();
    for (std::size_t i = 0; i < count && shortcut_; ++i) {
      const auto row = graph_.distances_from(i);
      for (std::size_t j = 0; j < count; ++j) {
        if (row[j] != (graph_.vertex(i) - graph_.vertex(j)).size()) {
          shortcut_ = false;
          mismatch_ = std::make_pair(graph_.vertex(i), graph_.vertex(j));
          break;
        }
      }
    }
    if (!shortcut_) {
      table_.reserve(count);
      for (std::size_t i = 0; i < count; ++i) table_.push_back(graph_.distances_from(i));
    }
  }

  /// True once every pair has been checked against |X \ Y|.
  bool shortcut_verified() const { return shortcut_; }
  std::optional<std::pair<BasisSet, BasisSet>> first_mismatch() const { return mismatch_; }
  const BasisGraph& graph() const { return graph_; }

  int operator()(BasisSet x, BasisSet y) const {
    if (shortcut_) return (x - y).size();
    return table_[graph_.index_of(x)][graph_.index_of(y)];
  }

 private:
  BasisGraph graph_;
  bool shortcut_ = true;
  std::optional<std::pair<BasisSet, BasisSet>> mismatch_;
  std::vector<std::vector<int>> table_;
};

}  // namespace curvatroid
