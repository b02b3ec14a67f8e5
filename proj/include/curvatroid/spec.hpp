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

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "curvatroid/rational.hpp"

namespace curvatroid {

struct ExplicitSpec {
  std::vector<std::string> ground;
  std::vector<std::vector<std::string>> bases;
};

/// U(k, n): every k-subset of an n-set.
struct UniformSpec {
  int n = 0;
  int k = 0;
};

struct GraphEdge {
  GraphEdge() = default;
  GraphEdge(int u_, int v_, std::string label_ = {}) : u(u_), v(v_), label(std::move(label_)) {}

  int u = 0;
  int v = 0;
  std::string label;  ///< empty: the edge index
};

/// Multigraph; parallel edges are distinct elements, u == v is a loop.
struct GraphicSpec {
  int vertices = 0;
  std::vector<GraphEdge> edges;
};

/// Column matroid of a rational matrix (rows x columns).
struct LinearSpec {
  std::vector<std::vector<Rational>> matrix;
  std::vector<std::string> labels;
};

struct NamedSpec {
  std::string key;
};

using MatroidSpec = std::variant<ExplicitSpec, UniformSpec, GraphicSpec, LinearSpec, NamedSpec>;

}  // namespace curvatroid
