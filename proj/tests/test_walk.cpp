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

#include "curvatroid/build.hpp"
#include "curvatroid/walk.hpp"
#include "oracles.hpp"

using namespace curvatroid;

namespace {

std::vector<Matroid> small_matroids() {
  std::vector<Matroid> out;
  out.push_back(build_matroid(UniformSpec{4, 2}));
  out.push_back(build_matroid(UniformSpec{5, 3}));
  out.push_back(build_matroid(NamedSpec{"k4"}));
  out.push_back(build_matroid(NamedSpec{"fano"}));
  out.push_back(build_matroid(NamedSpec{"vamos"}));
  out.push_back(build_matroid(GraphicSpec{5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}}));
  return out;
}

}  // namespace

TEST(Transition, Uniform42) {
  const Matroid m = build_matroid(UniformSpec{4, 2});
  const Distribution d = transition_distribution(m, ElementSet{0, 1});
  EXPECT_EQ(d.size(), 5u);
  EXPECT_EQ(d.mass(ElementSet{0, 1}), Rational(1, 3));
  for (BasisSet b : {ElementSet{1, 2}, ElementSet{1, 3}, ElementSet{0, 2}, ElementSet{0, 3}}) {
    EXPECT_EQ(d.mass(b), Rational(1, 6));
  }
}

TEST(Transition, K4UpStepProbabilities) {
  // Dropping "left" leaves 4 completions, the other drops 3: per-outcome
  // masses 1/9 and 1/12 with k = 3.
  const Matroid m = build_matroid(NamedSpec{"k4"});
  const BasisSet s = m.to_set(catalog::k4_pair().s);
  const Distribution d = transition_distribution(m, s);
  const Element left = m.element("left");
  for (Element u : s) {
    const ElementSet n = exchange_neighborhood(m, s, u);
    EXPECT_EQ(n.size(), u == left ? 4 : 3);
    for (Element x : n) {
      if (x == u) continue;
      EXPECT_EQ(d.mass(s.exchange(u, x)), u == left ? Rational(1, 12) : Rational(1, 9));
    }
  }
  EXPECT_EQ(d.mass(s), Rational(1, 9) * 2 + Rational(1, 12));
}

TEST(Transition, MatchesDefinitionAndInvariants) {
  for (const Matroid& m : small_matroids()) {
    const BasisGraph g(m);
    for (BasisSet s : m.bases()) {
      const Distribution d = transition_distribution(m, s);
      EXPECT_EQ(d.total(), 1);
      const auto expected = oracle::transition_row(m, s);
      ASSERT_EQ(d.size(), expected.size());
      for (const auto& [b, mass] : expected) EXPECT_EQ(d.mass(b), mass);

      Rational lazy_floor = 0;
      for (Element u : s) lazy_floor += Rational(1, m.rank() * exchange_neighborhood(m, s, u).size());
      EXPECT_GE(d.mass(s), lazy_floor);
      EXPECT_GT(d.mass(s), 0);
      for (const auto& [b, mass] : d) {
        EXPECT_GT(mass, 0);
        EXPECT_LE(basis_distance(g, s, b), 1);
      }
    }
  }
}

TEST(Transition, SymmetricAndDoublyStochastic) {
  for (const Matroid& m : small_matroids()) {
    std::map<BasisSet, Rational> column;
    for (BasisSet s : m.bases()) {
      const Distribution ds = transition_distribution(m, s);
      for (const auto& [t, mass] : ds) {
        EXPECT_EQ(mass, transition_distribution(m, t).mass(s));
        column[t] += mass;
      }
    }
    for (const auto& [t, total] : column) EXPECT_EQ(total, 1) << m.format(t);
  }
}

TEST(Transition, RejectsNonBasis) {
  const Matroid m = build_matroid(NamedSpec{"k4"});
  EXPECT_THROW(transition_distribution(m, m.to_set(std::vector<std::string>{"bottom", "right", "diag_ac"})), Error);
}

TEST(BasisDistance, Examples) {
  const Matroid m = build_matroid(UniformSpec{4, 2});
  const BasisGraph g(m);
  EXPECT_EQ(basis_distance(g, ElementSet{0, 1}, ElementSet{0, 1}), 0);
  EXPECT_EQ(basis_distance(g, ElementSet{0, 1}, ElementSet{2, 3}), 2);
  EXPECT_EQ(g.edge_count(), 12u);
}

TEST(BasisDistance, Rank3TwoStepRoute) {
  // U'+s+x ~ U'+s+t ~ U'+t+y with U' = {u'}, x in A_u, y outside {s, x}.
  const Matroid m = build_matroid(NamedSpec{"rank3-counterexample"});
  const BasisGraph g(m);
  const auto set = [&](std::vector<std::string> v) { return m.to_set(v); };
  EXPECT_EQ(basis_distance(g, set({"u'", "s", "v1"}), set({"u'", "t", "w2"})), 2);
}

TEST(DistanceMatrix, RowsMatchSingleQueries) {
  const Matroid m = build_matroid(NamedSpec{"k4"});
  const BasisGraph g(m);
  const BasisSet s = m.bases()[3];
  const auto rows = distance_matrix(g, std::vector<BasisSet>{s});
  ASSERT_EQ(rows.size(), 1u);
  for (std::size_t j = 0; j < g.vertex_count(); ++j) EXPECT_EQ(rows[0][j], basis_distance(g, s, g.vertex(j)));
}

TEST(DistanceMatrix, JohnsonGraphDiameterIsTwo) {
  const Matroid m = build_matroid(UniformSpec{4, 2});
  const BasisGraph g(m);
  const auto rows = distance_matrix(g, m.bases());
  int diameter = 0;
  for (const auto& row : rows)
    for (int d : row) diameter = std::max(diameter, d);
  EXPECT_EQ(diameter, 2);
}

TEST(DistanceMatrix, AgreesWithSetDifferenceAndFloydWarshall) {
  std::vector<Matroid> ms = small_matroids();
  ms.push_back(build_matroid(NamedSpec{"rank3-counterexample"}));
  for (const Matroid& m : ms) {
    const BasisGraph g(m);
    const auto rows = distance_matrix(g, m.bases());
    const auto reference = oracle::all_pairs_distances(m);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) {
        EXPECT_EQ(rows[i][j], reference[i][j]);
        EXPECT_EQ(rows[i][j], (m.bases()[i] - m.bases()[j]).size());
      }
    }
    EXPECT_TRUE(DistanceOracle(m).shortcut_verified()) << m.origin();
  }
}

TEST(DistanceMatrix, MetricAxioms) {
  for (const Matroid& m : small_matroids()) {
    if (m.ground_size() > 8) continue;
    const auto d = distance_matrix(BasisGraph(m), m.bases());
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(d[i][j] == 0, i == j);
        EXPECT_EQ(d[i][j], d[j][i]);
        for (std::size_t k = 0; k < n; ++k) EXPECT_LE(d[i][k], d[i][j] + d[j][k]);
      }
    }
  }
}

TEST(DistanceOracle, FallsBackWhenShortcutFails) {
  // Not a matroid: the path ab - bc - cd - de puts ab and de three hops
  // apart although they differ in two elements.
  const Matroid m(std::vector<std::string>{"a", "b", "c", "d", "e"},
                  {ElementSet{0, 1}, ElementSet{1, 2}, ElementSet{2, 3}, ElementSet{3, 4}}, "explicit");
  const DistanceOracle o(m);
  EXPECT_FALSE(o.shortcut_verified());
  EXPECT_EQ(o(ElementSet{0, 1}, ElementSet{3, 4}), 3);
  const BasisGraph g(m);
  for (BasisSet x : m.bases())
    for (BasisSet y : m.bases()) EXPECT_EQ(o(x, y), basis_distance(g, x, y));
}
