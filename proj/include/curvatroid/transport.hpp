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

#include <boost/integer/common_factor_rt.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvatroid/rational.hpp"
#include "curvatroid/walk.hpp"

namespace curvatroid {

/// Joint distribution over basis pairs.
class Coupling {
 public:
  using Key = std::pair<BasisSet, BasisSet>;
  using Map = std::map<Key, Rational>;

  void add(BasisSet x, BasisSet y, const Rational& mass) { mass_[{x, y}] += mass; }
  void set(BasisSet x, BasisSet y, const Rational& mass) { mass_[{x, y}] = mass; }

  Rational mass(BasisSet x, BasisSet y) const {
    auto it = mass_.find({x, y});
    return it == mass_.end() ? Rational(0) : it->second;
  }

  std::size_t size() const { return mass_.size(); }
  Map::const_iterator begin() const { return mass_.begin(); }
  Map::const_iterator end() const { return mass_.end(); }

  Distribution first_marginal() const {
    Distribution d;
    for (const auto& [key, m] : mass_) d.add(key.first, m);
    return d;
  }
  Distribution second_marginal() const {
    Distribution d;
    for (const auto& [key, m] : mass_) d.add(key.second, m);
    return d;
  }

 private:
  Map mass_;
};

/// Balanced transportation instance. cost[i][j] pairs the i-th element of
/// mu.support() with the j-th element of nu.support().
struct TransportProblem {
  Distribution mu;
  Distribution nu;
  std::vector<std::vector<std::int64_t>> cost;
};

template <class Metric>
TransportProblem make_transport_problem(Distribution mu, Distribution nu, Metric&& metric) {
  TransportProblem p{std::move(mu), std::move(nu), {}};
  const auto cols = p.nu.support();
  for (BasisSet x : p.mu.support()) {
    std::vector<std::int64_t> row;
    row.reserve(cols.size());
    for (BasisSet y : cols) row.push_back(static_cast<std::int64_t>(metric(x, y)));
    p.cost.push_back(std::move(row));
  }
  return p;
}

struct TransportSolution {
  Rational value;
  Coupling coupling;
};

namespace detail {

class MinCostFlow {
 public:
  explicit MinCostFlow(std::size_t nodes) : graph_(nodes) {}

  /// Returns the index of the forward arc within graph_[from].
  std::size_t add_arc(std::size_t from, std::size_t to, const Integer& cap, std::int64_t cost) {
    graph_[from].push_back({to, cap, cost, graph_[to].size()});
    graph_[to].push_back({from, Integer(0), -cost, graph_[from].size() - 1});
    return graph_[from].size() - 1;
  }

  /// Successive shortest paths with Bellman-Ford; relaxation order is fixed,
  /// so ties resolve towards lower node and arc indices.
  Integer run(std::size_t source, std::size_t sink, const Integer& target) {
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    const std::size_t n = graph_.size();
    Integer flow = 0;
    while (flow < target) {
      std::vector<std::int64_t> dist(n, kInf);
      std::vector<std::pair<std::size_t, std::size_t>> parent(n, {n, 0});
      dist[source] = 0;
      for (std::size_t round = 0; round + 1 < n; ++round) {
        bool changed = false;
        for (std::size_t v = 0; v < n; ++v) {
          if (dist[v] == kInf) continue;
          for (std::size_t a = 0; a < graph_[v].size(); ++a) {
            const Arc& arc = graph_[v][a];
            if (arc.cap > 0 && dist[v] + arc.cost < dist[arc.to]) {
              dist[arc.to] = dist[v] + arc.cost;
              parent[arc.to] = {v, a};
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (dist[sink] == kInf) break;
      Integer push = target - flow;
      for (std::size_t v = sink; v != source; v = parent[v].first) {
        const Arc& arc = graph_[parent[v].first][parent[v].second];
        if (arc.cap < push) push = arc.cap;
      }
      for (std::size_t v = sink; v != source; v = parent[v].first) {
        Arc& arc = graph_[parent[v].first][parent[v].second];
        arc.cap -= push;
        graph_[arc.to][arc.rev].cap += push;
      }
      flow += push;
    }
    return flow;
  }

  const Integer& residual(std::size_t from, std::size_t arc) const { return graph_[from][arc].cap; }

 private:
  struct Arc {
    std::size_t to;
    Integer cap;
    std::int64_t cost;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> graph_;
};

inline std::string describe(BasisSet b) {
  std::string out = "{";
  bool first = true;
  for (Element e : b) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace detail

/// Exact W1 and an optimal coupling.
///
/// Marginals are scaled by the lcm of all their denominators, the resulting
/// integral transportation problem is solved as a min-cost flow, and the flow
/// is divided back.
inline TransportSolution wasserstein1(const TransportProblem& p) {
  const auto rows = p.mu.support();
  const auto cols = p.nu.support();
  if (p.mu.total() != p.nu.total()) {
    throw Error(ErrorCode::kUnbalancedMarginals,
                "marginals sum to " + to_string(p.mu.total()) + " and " + to_string(p.nu.total()));
  }
  if (p.cost.size() != rows.size()) throw Error(ErrorCode::kInvalidSpec, "cost matrix has wrong row count");
  for (const auto& row : p.cost) {
    if (row.size() != cols.size()) throw Error(ErrorCode::kInvalidSpec, "cost matrix has wrong column count");
    for (auto c : row) {
      if (c < 0) throw Error(ErrorCode::kInvalidSpec, "negative transport cost");
    }
  }

  Integer scale = 1;
  for (const auto& [b, m] : p.mu) scale = boost::integer::lcm(scale, Integer(denominator(m)));
  for (const auto& [b, m] : p.nu) scale = boost::integer::lcm(scale, Integer(denominator(m)));
  auto scaled = [&](const Rational& m) { return Integer(numerator(m) * (scale / denominator(m))); };

  const std::size_t m = rows.size();
  const std::size_t n = cols.size();
  const std::size_t source = 0;
  const std::size_t sink = m + n + 1;
  detail::MinCostFlow net(m + n + 2);
  Integer total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Integer supply = scaled(p.mu.mass(rows[i]));
    total += supply;
    net.add_arc(source, 1 + i, supply, 0);
  }
  std::vector<std::vector<std::size_t>> arc_of(m, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) arc_of[i][j] = net.add_arc(1 + i, 1 + m + j, total, p.cost[i][j]);
  }
  for (std::size_t j = 0; j < n; ++j) net.add_arc(1 + m + j, sink, scaled(p.nu.mass(cols[j])), 0);

  const Integer flow = net.run(source, sink, total);
  if (flow != total) throw Error(ErrorCode::kUnbalancedMarginals, "transport network could not route all mass");

  TransportSolution out;
  Integer cost_sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Integer moved = total - net.residual(1 + i, arc_of[i][j]);
      if (moved == 0) continue;
      out.coupling.set(rows[i], cols[j], Rational(moved, scale));
      cost_sum += moved * p.cost[i][j];
    }
  }
  out.value = Rational(cost_sum, scale);
  return out;
}

/// Exact check of non-negativity and both marginals.
inline ValidationResult verify_coupling(const Coupling& c, const Distribution& mu, const Distribution& nu) {
  for (const auto& [key, m] : c) {
    if (m < 0) {
      return ValidationResult::fail("negative mass " + to_string(m) + " at (" + detail::describe(key.first) + ", " +
                                    detail::describe(key.second) + ")");
    }
  }
  auto compare = [](const Distribution& got, const Distribution& want, const char* side) -> ValidationResult {
    for (const auto& [b, m] : got) {
      if (want.mass(b) != m) {
        return ValidationResult::fail(std::string(side) + " marginal at " + detail::describe(b) + " is " +
                                      to_string(m) + ", expected " + to_string(want.mass(b)));
      }
    }
    for (const auto& [b, m] : want) {
      if (got.mass(b) != m) {
        return ValidationResult::fail(std::string(side) + " marginal at " + detail::describe(b) + " is " +
                                      to_string(got.mass(b)) + ", expected " + to_string(m));
      }
    }
    return ValidationResult::pass();
  };
  if (auto r = compare(c.first_marginal(), mu, "first"); !r) return r;
  return compare(c.second_marginal(), nu, "second");
}

template <class Metric>
Rational expected_distance(const Coupling& c, Metric&& metric) {
  Rational sum = 0;
  for (const auto& [key, m] : c) sum += m * metric(key.first, key.second);
  return sum;
}

inline Coupling product_coupling(const Distribution& mu, const Distribution& nu) {
  Coupling c;
  for (const auto& [x, a] : mu) {
    for (const auto& [y, b] : nu) c.set(x, y, a * b);
  }
  return c;
}

inline Coupling identity_coupling(const Distribution& mu) {
  Coupling c;
  for (const auto& [x, a] : mu) c.set(x, x, a);
  return c;
}

}  // namespace curvatroid
