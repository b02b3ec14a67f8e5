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

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvatroid/error.hpp"
#include "curvatroid/spec.hpp"

// Built-in matroids. Each entry is stored as an ordinary MatroidSpec so it
// goes through the same constructors as user input.

namespace curvatroid::catalog {

struct Entry {
  std::string name;
  std::string description;
};

/// A distinguished pair of adjacent bases shipped with an entry.
struct LabeledPair {
  std::vector<std::string> s;
  std::vector<std::string> t;
};

inline std::vector<Entry> entries() {
  return {
      {"vamos", "rank-4 Vamos matroid on 8 elements, 65 bases"},
      {"fano", "rank-3 Fano plane, 28 bases (triples that are not lines)"},
      {"k4", "graphic matroid of K4, edges labelled by position in a square"},
      {"k6", "graphic matroid of K6, outer hexagon labelled 1,2,t,3,4,s"},
      {"rank3-counterexample", "rank-3 linear matroid on 14 elements with negative curvature"},
  };
}

inline std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

inline bool contains(std::string_view name) {
  const auto all = names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

// Vamos: four "lines" {a1,a2}, {b1,b2}, {c1,c2}, {d1,d2}; the union of any two
// lines is dependent except {c,d}.
inline ExplicitSpec vamos() {
  const std::vector<std::string> ground{"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"};
  const std::vector<std::vector<int>> excluded{
      {0, 1, 2, 3}, {0, 1, 4, 5}, {0, 1, 6, 7}, {2, 3, 4, 5}, {2, 3, 6, 7}};
  ExplicitSpec spec{ground, {}};
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c)
        for (int d = c + 1; d < 8; ++d) {
          const std::vector<int> quad{a, b, c, d};
          if (std::find(excluded.begin(), excluded.end(), quad) != excluded.end()) continue;
          spec.bases.push_back({ground[a], ground[b], ground[c], ground[d]});
        }
  return spec;
}

inline std::vector<std::vector<std::string>> vamos_excluded() {
  return {{"a1", "a2", "b1", "b2"},
          {"a1", "a2", "c1", "c2"},
          {"a1", "a2", "d1", "d2"},
          {"b1", "b2", "c1", "c2"},
          {"b1", "b2", "d1", "d2"}};
}

inline std::vector<std::vector<std::string>> fano_lines() {
  return {{"1", "2", "3"}, {"1", "4", "5"}, {"1", "6", "7"}, {"2", "4", "6"},
          {"2", "5", "7"}, {"3", "4", "7"}, {"3", "5", "6"}};
}

inline ExplicitSpec fano() {
  ExplicitSpec spec{{"1", "2", "3", "4", "5", "6", "7"}, {}};
  const auto lines = fano_lines();
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) {
        std::vector<std::string> triple{spec.ground[a], spec.ground[b], spec.ground[c]};
        if (std::find(lines.begin(), lines.end(), triple) != lines.end()) continue;
        spec.bases.push_back(std::move(triple));
      }
  return spec;
}

// Square with corners 0 = bottom-left, 1 = bottom-right, 2 = top-right,
// 3 = top-left, plus both diagonals.
inline GraphicSpec k4() {
  return {4,
          {{0, 1, "bottom"},
           {1, 2, "right"},
           {2, 3, "top"},
           {3, 0, "left"},
           {0, 2, "diag_ac"},
           {1, 3, "diag_bd"}}};
}

/// The two spanning trees of the worked K4 coupling example.
inline LabeledPair k4_pair() { return {{"bottom", "left", "top"}, {"diag_bd", "left", "top"}}; }

// Hexagon vertices 0..5; outer edges in cyclic order 1, 2, t, 3, 4, s and
// chords labelled "d<i><j>" with 1-based vertex numbers.
inline GraphicSpec k6() {
  GraphicSpec g{6,
                {{0, 1, "1"}, {1, 2, "2"}, {2, 3, "t"}, {3, 4, "3"}, {4, 5, "4"}, {5, 0, "s"}}};
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 2; j < 6; ++j) {
      if (i == 0 && j == 5) continue;
      g.edges.push_back({i, j, "d" + std::to_string(i + 1) + std::to_string(j + 1)});
    }
  }
  return g;
}

/// The two Hamiltonian paths S = {s,1,2,3,4}, T = {t,1,2,3,4}.
inline LabeledPair k6_pair() { return {{"s", "1", "2", "3", "4"}, {"t", "1", "2", "3", "4"}}; }

inline std::vector<std::string> rank3_labels() {
  std::vector<std::string> labels{"s", "t", "u", "u'"};
  for (int i = 1; i <= 5; ++i) labels.push_back("v" + std::to_string(i));
  for (int i = 1; i <= 5; ++i) labels.push_back("w" + std::to_string(i));
  return labels;
}

/// The basis list, entered by hand.
inline ExplicitSpec rank3_counterexample() {
  ExplicitSpec spec{rank3_labels(), {}};
  auto& b = spec.bases;
  b.push_back({"s", "u", "u'"});
  b.push_back({"t", "u", "u'"});
  b.push_back({"s", "t", "u"});
  b.push_back({"s", "t", "u'"});
  for (int i = 1; i <= 5; ++i) {
    const std::string v = "v" + std::to_string(i);
    const std::string w = "w" + std::to_string(i);
    b.push_back({"s", "u", v});
    b.push_back({"s", "u'", v});
    b.push_back({"t", "u", w});
    b.push_back({"t", "u'", w});
    b.push_back({"u", "u'", v});
    b.push_back({"u", "u'", w});
  }
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      const std::string v = "v" + std::to_string(i);
      const std::string w = "w" + std::to_string(j);
      b.push_back({"u", v, w});
      b.push_back({"u'", v, w});
    }
  }
  return spec;
}

/// Representing vectors in R^3; v_i repeats t's column and w_i repeats s's.
inline LinearSpec rank3_counterexample_matrix() {
  const std::vector<std::vector<int>> columns{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1},  // s, t, u, u'
      {0, 1, 0}, {0, 1, 0}, {0, 1, 0}, {0, 1, 0}, {0, 1, 0},  // v1..v5
      {1, 0, 0}, {1, 0, 0}, {1, 0, 0}, {1, 0, 0}, {1, 0, 0},  // w1..w5
  };
  LinearSpec spec;
  spec.labels = rank3_labels();
  spec.matrix.assign(3, std::vector<Rational>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < 3; ++r) spec.matrix[r][c] = columns[c][r];
  }
  return spec;
}

inline LabeledPair rank3_pair() { return {{"s", "u", "u'"}, {"t", "u", "u'"}}; }

inline MatroidSpec lookup(std::string_view name) {
  if (name == "vamos") return vamos();
  if (name == "fano") return fano();
  if (name == "k4") return k4();
  if (name == "k6") return k6();
  if (name == "rank3-counterexample") return rank3_counterexample();
  throw Error(ErrorCode::kUnknownCatalogKey, "no built-in matroid named '" + std::string(name) + "'");
}

/// The worked-example pair for entries that have one.
inline std::optional<LabeledPair> distinguished_pair(std::string_view name) {
  if (name == "k4") return k4_pair();
  if (name == "k6") return k6_pair();
  if (name == "rank3-counterexample") return rank3_pair();
  return std::nullopt;
}

}  // namespace curvatroid::catalog
