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

#include <gtest/gtest.h>

#include <random>

#include "curvatroid/build.hpp"
#include "curvatroid/transport.hpp"
#include "oracles.hpp"

using namespace curvatroid;

namespace {

std::vector<Rational> masses(const Distribution& d) {
  std::vector<Rational> out;
  for (const auto& [b, m] : d) out.push_back(m);
  return out;
}

Rational brute_force(const TransportProblem& p) {
  return oracle::brute_force_transport(masses(p.mu), masses(p.nu), p.cost);
}

/// Uniform distribution over {s - u + x : x in N(s - u)}.
Distribution up_step(const Matroid& m, BasisSet s, Element u) {
  Distribution d;
  const ElementSet n = exchange_neighborhood(m, s, u);
  for (Element x : n) d.add(s.exchange(u, x), Rational(1, n.size()));
  return d;
}

Distribution random_distribution(std::mt19937& rng, int support, int offset) {
  Distribution d;
  std::vector<int> weights;
  int total = 0;
  for (int i = 0; i < support; ++i) {
    weights.push_back(1 + static_cast<int>(rng() % 7));
    total += weights.back();
  }
  for (int i = 0; i < support; ++i) d.add(ElementSet::singleton(offset + i), Rational(weights[i], total));
  return d;
}

TransportProblem random_problem(std::mt19937& rng, int rows, int cols) {
  TransportProblem p{random_distribution(rng, rows, 0), random_distribution(rng, cols, 32), {}};
  p.cost.assign(static_cast<std::size_t>(rows), std::vector<std::int64_t>(static_cast<std::size_t>(cols)));
  for (auto& row : p.cost)
    for (auto& c : row) c = static_cast<std::int64_t>(rng() % 5);
  return p;
}

Rational cost_of(const TransportProblem& p, const Coupling& c) {
  const auto rows = p.mu.support();
  const auto cols = p.nu.support();
  return expected_distance(c, [&](BasisSet x, BasisSet y) {
    const auto i = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), x) - rows.begin());
    const auto j = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), y) - cols.begin());
    return p.cost[i][j];
  });
}

/// Moves mass around a random 2x2 cycle; marginals are preserved.
Coupling perturb(std::mt19937& rng, const TransportProblem& p, Coupling c) {
  const auto rows = p.mu.support();
  const auto cols = p.nu.support();
  if (rows.size() < 2 || cols.size() < 2) return c;
  for (int step = 0; step < 4; ++step) {
    const auto i = rows[rng() % rows.size()];
    const auto i2 = rows[rng() % rows.size()];
    const auto j = cols[rng() % cols.size()];
    const auto j2 = cols[rng() % cols.size()];
    if (i == i2 || j == j2) continue;
    const Rational room = std::min(c.mass(i, j), c.mass(i2, j2));
    if (room == 0) continue;
    const Rational shift = room * Rational(1 + static_cast<int>(rng() % 4), 4);
    c.set(i, j, c.mass(i, j) - shift);
    c.set(i2, j2, c.mass(i2, j2) - shift);
    c.set(i, j2, c.mass(i, j2) + shift);
    c.set(i2, j, c.mass(i2, j) + shift);
  }
  return c;
}

}  // namespace

TEST(Wasserstein, EqualMarginalsCostNothing) {
  const Matroid m = build_matroid(NamedSpec{"k4"});
  const DistanceOracle d(m);
  const Distribution mu = transition_distribution(m, m.bases()[2]);
  const auto sol = wasserstein1(make_transport_problem(mu, mu, d));
  EXPECT_EQ(sol.value, 0);
  for (const auto& [key, mass] : sol.coupling) EXPECT_EQ(key.first, key.second);
  EXPECT_TRUE(verify_coupling(sol.coupling, mu, mu));
}

TEST(Wasserstein, PointMassesCostTheirDistance) {
  const Matroid m = build_matroid(UniformSpec{4, 2});
  const DistanceOracle d(m);
  const auto sol = wasserstein1(
      make_transport_problem(Distribution::point_mass(ElementSet{0, 1}), Distribution::point_mass(ElementSet{2, 3}), d));
  EXPECT_EQ(sol.value, 2);
}

TEST(Wasserstein, Uniform42AdjacentPairIsOneThird) {
  const Matroid m = build_matroid(UniformSpec{4, 2});
  const DistanceOracle d(m);
  const auto p = make_transport_problem(transition_distribution(m, ElementSet{0, 1}),
                                        transition_distribution(m, ElementSet{0, 2}), d);
  ASSERT_EQ(p.mu.size(), 5u);
  EXPECT_EQ(brute_force(p), Rational(1, 3));  // frozen: vertex enumeration of the 5x5 polytope
  const auto sol = wasserstein1(p);
  EXPECT_EQ(sol.value, Rational(1, 3));
  EXPECT_TRUE(verify_coupling(sol.coupling, p.mu, p.nu));
  EXPECT_EQ(cost_of(p, sol.coupling), sol.value);
}

TEST(Wasserstein, MatchesVertexEnumerationOnUpStepProblems) {
  for (const char* name : {"k4"}) {
    const Matroid m = build_matroid(NamedSpec{name});
    const DistanceOracle d(m);
    for (const auto& [S, T] : adjacent_basis_pairs(m)) {
      for (Element u : S) {
        for (Element v : T) {
          const auto p = make_transport_problem(up_step(m, S, u), up_step(m, T, v), d);
          EXPECT_EQ(wasserstein1(p).value, brute_force(p));
        }
      }
    }
  }
}

TEST(Wasserstein, MatchesVertexEnumerationOnRandomSmallProblems) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = random_problem(rng, 1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4));
    const auto sol = wasserstein1(p);
    EXPECT_EQ(sol.value, brute_force(p));
    EXPECT_EQ(cost_of(p, sol.coupling), sol.value);
  }
}

TEST(Wasserstein, BeatsProductAndRandomCouplings) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_problem(rng, 3 + static_cast<int>(rng() % 3), 3 + static_cast<int>(rng() % 3));
    const Rational best = wasserstein1(p).value;
    const Coupling product = product_coupling(p.mu, p.nu);
    EXPECT_LE(best, cost_of(p, product));
    for (int i = 0; i < 100; ++i) {
      const Coupling c = perturb(rng, p, product);
      ASSERT_TRUE(verify_coupling(c, p.mu, p.nu));
      EXPECT_LE(best, cost_of(p, c));
    }
  }
}

TEST(Wasserstein, ScalesWithCosts) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_problem(rng, 4, 3);
    const Rational base = wasserstein1(p).value;
    for (auto& row : p.cost)
      for (auto& c : row) c *= 3;
    EXPECT_EQ(wasserstein1(p).value, base * 3);
  }
}

TEST(Wasserstein, ZeroExactlyWhenMarginalsAgree) {
  const Matroid m = build_matroid(NamedSpec{"fano"});
  const DistanceOracle d(m);
  const auto bases = m.bases();
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const auto mu = transition_distribution(m, bases[i]);
      const auto nu = transition_distribution(m, bases[j]);
      EXPECT_EQ(wasserstein1(make_transport_problem(mu, nu, d)).value == 0, mu == nu);
    }
  }
}

TEST(Wasserstein, DeterministicCoupling) {
  const Matroid m = build_matroid(NamedSpec{"vamos"});
  const DistanceOracle d(m);
  const auto [S, T] = adjacent_basis_pairs(m).front();
  const auto p = make_transport_problem(transition_distribution(m, S), transition_distribution(m, T), d);
  const auto a = wasserstein1(p);
  const auto b = wasserstein1(p);
  EXPECT_TRUE(std::equal(a.coupling.begin(), a.coupling.end(), b.coupling.begin(), b.coupling.end()));
}

TEST(Wasserstein, RejectsUnbalancedMarginals) {
  TransportProblem p{Distribution::point_mass(ElementSet{0}), {}, {{}}};
  p.nu.add(ElementSet{1}, Rational(1, 2));
  p.cost = {{1}};
  try {
    wasserstein1(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnbalancedMarginals);
  }
}

TEST(VerifyCoupling, ProductPassesAndPerturbationFails) {
  const Matroid m = build_matroid(UniformSpec{4, 2});
  const Distribution mu = transition_distribution(m, ElementSet{0, 1});
  const Distribution nu = transition_distribution(m, ElementSet{0, 2});
  Coupling c = product_coupling(mu, nu);
  EXPECT_TRUE(verify_coupling(c, mu, nu));
  const auto& [key, mass] = *c.begin();
  c.set(key.first, key.second, mass + Rational(1, 1000000));
  const auto r = verify_coupling(c, mu, nu);
  EXPECT_FALSE(r);
  EXPECT_NE(r.detail.find("marginal"), std::string::npos);
}

TEST(VerifyCoupling, NegativeMassFails) {
  const Distribution mu = Distribution::point_mass(ElementSet{0});
  Coupling c;
  c.set(ElementSet{0}, ElementSet{0}, 2);
  c.set(ElementSet{0}, ElementSet{1}, -1);
  Distribution nu;
  nu.add(ElementSet{0}, 2);
  nu.add(ElementSet{1}, -1);
  EXPECT_FALSE(verify_coupling(c, mu, nu));
}

TEST(ExpectedDistance, IdentityAndProduct) {
  const Matroid m = build_matroid(UniformSpec{4, 2});
  const DistanceOracle d(m);
  const Distribution mu = transition_distribution(m, ElementSet{0, 1});
  const Distribution nu = transition_distribution(m, ElementSet{0, 2});
  EXPECT_EQ(expected_distance(identity_coupling(mu), d), 0);
  const Rational product = expected_distance(product_coupling(mu, nu), d);
  EXPECT_GE(product, Rational(1, 3));
  EXPECT_GT(product, Rational(1, 3));
}
