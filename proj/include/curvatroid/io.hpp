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

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "curvatroid/build.hpp"
#include "curvatroid/catalog.hpp"
#include "curvatroid/curvature.hpp"
#include "curvatroid/spec.hpp"
#include "curvatroid/walk.hpp"

namespace curvatroid::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "1.0.0";

namespace detail {

[[noreturn]] inline void field_error(std::string_view field, std::string_view what) {
  throw Error(ErrorCode::kParseError, "field '" + std::string(field) + "': " + std::string(what));
}

inline const Json& require(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(key, "missing");
  return *it;
}

inline int require_int(const Json& obj, const char* key) {
  const Json& v = require(obj, key);
  if (!v.is_number_integer()) field_error(key, "expected an integer");
  return v.get<int>();
}

inline std::string as_label(const Json& v, std::string_view field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  field_error(field, "expected a string or integer label");
}

inline std::vector<std::string> label_list(const Json& v, std::string_view field) {
  if (!v.is_array()) field_error(field, "expected an array");
  std::vector<std::string> out;
  for (const auto& item : v) out.push_back(as_label(item, field));
  return out;
}

inline Rational as_rational(const Json& v, std::string_view field) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) {
    throw Error(ErrorCode::kBadRational, "field '" + std::string(field) + "': entries must be \"p/q\" strings");
  }
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::kBadRational, "field '" + std::string(field) + "': " + e.what());
  }
}

inline Json optional_rational(const std::optional<Rational>& r) {
  return r ? Json(to_string(*r)) : Json(nullptr);
}

inline std::optional<Rational> read_optional_rational(const Json& obj, const char* key) {
  const Json& v = require(obj, key);
  if (v.is_null()) return std::nullopt;
  return as_rational(v, key);
}

}  // namespace detail

inline MatroidSpec parse_matroid_json(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kParseError, "matroid description must be a JSON object");
  const Json& type_field = detail::require(doc, "type");
  if (!type_field.is_string()) detail::field_error("type", "expected a string");
  const std::string type = type_field.get<std::string>();

  if (type == "uniform") return UniformSpec{detail::require_int(doc, "n"), detail::require_int(doc, "k")};

  if (type == "graphic") {
    GraphicSpec g;
    g.vertices = detail::require_int(doc, "vertices");
    const Json& edges = detail::require(doc, "edges");
    if (!edges.is_array()) detail::field_error("edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Json& e = edges[i];
      const std::string field = "edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        detail::field_error(field, "expected [u, v] or [u, v, label]");
      }
      g.edges.push_back({e[0].get<int>(), e[1].get<int>(), e.size() == 3 ? detail::as_label(e[2], field) : ""});
    }
    return g;
  }

  if (type == "linear") {
    LinearSpec l;
    const Json& matrix = detail::require(doc, "matrix");
    if (!matrix.is_array()) detail::field_error("matrix", "expected an array of rows");
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      const std::string field = "matrix[" + std::to_string(r) + "]";
      if (!matrix[r].is_array()) detail::field_error(field, "expected an array");
      std::vector<Rational> row;
      for (std::size_t c = 0; c < matrix[r].size(); ++c) {
        row.push_back(detail::as_rational(matrix[r][c], field + "[" + std::to_string(c) + "]"));
      }
      l.matrix.push_back(std::move(row));
    }
    if (auto it = doc.find("labels"); it != doc.end()) l.labels = detail::label_list(*it, "labels");
    return l;
  }

  if (type == "explicit") {
    ExplicitSpec e;
    e.ground = detail::label_list(detail::require(doc, "ground"), "ground");
    const Json& bases = detail::require(doc, "bases");
    if (!bases.is_array()) detail::field_error("bases", "expected an array");
    for (std::size_t i = 0; i < bases.size(); ++i) {
      e.bases.push_back(detail::label_list(bases[i], "bases[" + std::to_string(i) + "]"));
    }
    return e;
  }

  if (type == "named") {
    const Json& name = detail::require(doc, "name");
    if (!name.is_string()) detail::field_error("name", "expected a string");
    if (!catalog::contains(name.get<std::string>())) {
      throw Error(ErrorCode::kUnknownCatalogKey, "no built-in matroid named '" + name.get<std::string>() + "'");
    }
    return NamedSpec{name.get<std::string>()};
  }

  throw Error(ErrorCode::kUnknownType, "unknown matroid type '" + type + "'");
}

inline MatroidSpec parse_matroid_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + e.what());
  }
  return parse_matroid_json(doc);
}

inline MatroidSpec parse_matroid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matroid_text(buffer.str());
}

/// "named:<key>" selects a catalog entry; anything else is a file path.
inline MatroidSpec resolve_input(const std::string& input) {
  constexpr std::string_view kPrefix = "named:";
  if (input.rfind(kPrefix, 0) == 0) {
    const std::string key = input.substr(kPrefix.size());
    if (!catalog::contains(key)) throw Error(ErrorCode::kUnknownCatalogKey, "no built-in matroid named '" + key + "'");
    return NamedSpec{key};
  }
  return parse_matroid_file(input);
}

/// FNV-1a over origin, labels and the basis family.
inline std::string origin_hash(const Matroid& m) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::string_view bytes) {
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  mix(m.origin());
  for (const auto& label : m.labels()) {
    mix(label);
    mix("\x1f");
  }
  for (BasisSet b : m.bases()) {
    const std::uint64_t bits = b.bits();
    mix(std::string_view(reinterpret_cast<const char*>(&bits), sizeof bits));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Json labels_json(const Matroid& m, ElementSet s) { return Json(m.to_labels(s)); }

inline ElementSet labels_from_json(const Matroid& m, const Json& v, std::string_view field) {
  return m.to_set(detail::label_list(v, field));
}

inline Json to_json(const Matroid& m, const Distribution& d) {
  Json out = Json::array();
  for (const auto& [b, mass] : d) out.push_back({{"basis", labels_json(m, b)}, {"mass", to_string(mass)}});
  return out;
}

inline Json to_json(const Matroid& m, const PairFrame& f) {
  Json shared = Json::array();
  for (Element u : f.shared) shared.push_back(m.label(u));
  return {{"S", labels_json(m, f.S)}, {"T", labels_json(m, f.T)}, {"s", m.label(f.s)}, {"t", m.label(f.t)},
          {"shared", shared}};
}

inline PairFrame pair_frame_from_json(const Matroid& m, const Json& v) {
  return make_pair_frame(m, labels_from_json(m, detail::require(v, "S"), "S"),
                         labels_from_json(m, detail::require(v, "T"), "T"));
}

inline Json to_json(const Matroid& m, const PairReport& r) {
  Json witness = Json::array();
  for (const auto& e : r.witness.shared) {
    witness.push_back({{"u", m.label(e.u)},
                       {"inJ", e.in_j},
                       {"sizeNS", e.size_ns()},
                       {"sizeNT", e.size_nt()},
                       {"sizeCap", e.size_cap()},
                       {"A", labels_json(m, e.a_forward)},
                       {"AReverse", labels_json(m, e.a_reverse)}});
  }
  Json out = to_json(m, r.frame);
  out["J"] = labels_json(m, r.witness.j);
  out["witness"] = witness;
  out["exactKappa"] = detail::optional_rational(r.exact_kappa);
  out["downstepLB"] = to_string(r.downstep_lb);
  out["corollaryLB"] = to_string(r.corollary_lb);
  out["theoremUBForward"] = to_string(r.theorem_ub.forward);
  out["theoremUBReverse"] = to_string(r.theorem_ub.reverse);
  out["theoremUB"] = to_string(r.theorem_ub.value);
  out["couplingExpectedDistance"] = detail::optional_rational(r.coupling_expected_distance);
  return out;
}

/// Inverse of to_json(PairReport); witness sets are recomputed from the frame
/// and must match what the document records.
inline PairReport pair_report_from_json(const Matroid& m, const Json& v) {
  PairReport r;
  r.frame = pair_frame_from_json(m, v);
  r.witness = compute_pair_witness(m, r.frame);
  if (labels_from_json(m, detail::require(v, "J"), "J") != r.witness.j) {
    throw Error(ErrorCode::kParseError, "field 'J' does not match the pair");
  }
  r.exact_kappa = detail::read_optional_rational(v, "exactKappa");
  r.downstep_lb = detail::as_rational(detail::require(v, "downstepLB"), "downstepLB");
  r.corollary_lb = detail::as_rational(detail::require(v, "corollaryLB"), "corollaryLB");
  r.theorem_ub.forward = detail::as_rational(detail::require(v, "theoremUBForward"), "theoremUBForward");
  r.theorem_ub.reverse = detail::as_rational(detail::require(v, "theoremUBReverse"), "theoremUBReverse");
  r.theorem_ub.value = detail::as_rational(detail::require(v, "theoremUB"), "theoremUB");
  r.coupling_expected_distance = detail::read_optional_rational(v, "couplingExpectedDistance");
  return r;
}

inline Json to_json(const Matroid& m, const GlobalReport& g) {
  auto frame = [&](const std::optional<PairFrame>& f) { return f ? to_json(m, *f) : Json(nullptr); };
  Json out{{"version", std::string(kVersion)},
           {"origin", g.origin},
           {"originHash", origin_hash(m)},
           {"n", g.ground_size},
           {"k", g.rank},
           {"basisCount", g.basis_count},
           {"pairCount", g.pair_count},
           {"degenerate", g.degenerate},
           {"distanceShortcutVerified", g.distance_shortcut_verified},
           {"kappaExact", detail::optional_rational(g.kappa_exact)},
           {"argminPair", frame(g.argmin_pair)},
           {"theoremLBGlobal", detail::optional_rational(g.theorem_lb_global)},
           {"downstepLBGlobal", detail::optional_rational(g.downstep_lb_global)},
           {"corollaryLBGlobal", detail::optional_rational(g.corollary_lb_global)},
           {"theoremUBGlobal", detail::optional_rational(g.theorem_ub_global)},
           {"theoremUBArgmin", frame(g.theorem_ub_argmin)},
           {"allPairsKappa", detail::optional_rational(g.all_pairs_kappa)}};
  if (!g.pairs.empty()) {
    Json pairs = Json::array();
    for (const auto& p : g.pairs) pairs.push_back(to_json(m, p));
    out["pairs"] = pairs;
  }
  return out;
}

inline GlobalReport global_report_from_json(const Matroid& m, const Json& v) {
  auto frame = [&](const char* key) -> std::optional<PairFrame> {
    const Json& f = detail::require(v, key);
    if (f.is_null()) return std::nullopt;
    return pair_frame_from_json(m, f);
  };
  GlobalReport g;
  g.origin = detail::require(v, "origin").get<std::string>();
  g.ground_size = detail::require_int(v, "n");
  g.rank = detail::require_int(v, "k");
  g.basis_count = detail::require(v, "basisCount").get<std::size_t>();
  g.pair_count = detail::require(v, "pairCount").get<std::size_t>();
  g.degenerate = detail::require(v, "degenerate").get<bool>();
  g.distance_shortcut_verified = detail::require(v, "distanceShortcutVerified").get<bool>();
  g.kappa_exact = detail::read_optional_rational(v, "kappaExact");
  g.argmin_pair = frame("argminPair");
  g.theorem_lb_global = detail::read_optional_rational(v, "theoremLBGlobal");
  g.downstep_lb_global = detail::read_optional_rational(v, "downstepLBGlobal");
  g.corollary_lb_global = detail::read_optional_rational(v, "corollaryLBGlobal");
  g.theorem_ub_global = detail::read_optional_rational(v, "theoremUBGlobal");
  g.theorem_ub_argmin = frame("theoremUBArgmin");
  g.all_pairs_kappa = detail::read_optional_rational(v, "allPairsKappa");
  if (auto it = v.find("pairs"); it != v.end()) {
    for (const auto& p : *it) g.pairs.push_back(pair_report_from_json(m, p));
  }
  return g;
}

template <class Metric>
Json to_json(const Matroid& m, const DownstepCoupling& c, Metric&& metric) {
  Json routes = Json::array();
  for (const auto& r : c.routes) {
    routes.push_back({{"dropS", m.label(r.drop_s)},
                      {"dropT", m.label(r.drop_t)},
                      {"addS", m.label(r.add_s)},
                      {"addT", m.label(r.add_t)},
                      {"X", labels_json(m, r.x)},
                      {"Y", labels_json(m, r.y)},
                      {"mass", to_string(r.mass)},
                      {"distance", metric(r.x, r.y)}});
  }
  return {{"frame", to_json(m, c.frame)},
          {"routes", routes},
          {"expectedDistance", to_string(downstep_coupling_expected_distance(c, metric))}};
}

inline Json to_json(const Matroid& m, const ExchangeValidation& v) {
  Json out{{"valid", v.passed}, {"basisCount", m.basis_count()}, {"rank", m.rank()}, {"n", m.ground_size()}};
  if (v.witness) {
    out["witness"] = {{"B1", labels_json(m, v.witness->b1_set)},
                      {"B2", labels_json(m, v.witness->b2_set)},
                      {"b1", m.label(v.witness->b1)}};
  }
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

namespace detail {

inline std::string csv_cell(const Json& v) {
  std::string text;
  if (v.is_null()) return "";
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) text += ' ';
      text += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
    }
  } else {
    text = v.dump();
  }
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

inline bool is_flat_record(const Json& v) {
  if (!v.is_object()) return false;
  for (const auto& [key, item] : v.items()) {
    if (item.is_object()) return false;
    if (item.is_array()) {
      for (const auto& x : item) {
        if (x.is_structured()) return false;
      }
    }
  }
  return true;
}

inline void flatten(const Json& v, const std::string& path, std::string& out) {
  if (v.is_object()) {
    for (const auto& [key, item] : v.items()) flatten(item, path.empty() ? key : path + "." + key, out);
  } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "." + std::to_string(i), out);
  } else {
    out += csv_cell(path) + "," + csv_cell(v) + "\n";
  }
}

}  // namespace detail

/// An array of flat records becomes a table; anything else becomes
/// "field,value" rows with dotted paths. Lists of labels are space-joined.
inline std::string to_csv(const Json& v) {
  std::string out;
  if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), detail::is_flat_record)) {
    std::vector<std::string> columns;
    for (const auto& [key, item] : v.front().items()) columns.push_back(key);
    for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + detail::csv_cell(columns[i]);
    out += "\n";
    for (const auto& row : v) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        auto it = row.find(columns[i]);
        out += (i ? "," : "") + (it == row.end() ? std::string() : detail::csv_cell(*it));
      }
      out += "\n";
    }
    return out;
  }
  out = "field,value\n";
  detail::flatten(v, "", out);
  return out;
}

/// Adds an "approx" object with 6-significant-digit renderings of the
/// top-level rational fields. The exact strings stay untouched.
inline void add_decimal_approximations(Json& v) {
  static const char* const kRationalFields[] = {
      "kappaExact",      "theoremLBGlobal",  "downstepLBGlobal", "corollaryLBGlobal",
      "theoremUBGlobal", "allPairsKappa",    "exactKappa",       "downstepLB",
      "corollaryLB",     "theoremUBForward", "theoremUBReverse", "theoremUB",
      "couplingExpectedDistance", "expectedDistance"};
  if (!v.is_object()) return;
  Json approx = Json::object();
  for (const char* key : kRationalFields) {
    auto it = v.find(key);
    if (it == v.end() || !it->is_string()) continue;
    approx[key] = to_decimal(parse_rational(it->get<std::string>()));
  }
  if (!approx.empty()) v["approx"] = approx;
}

}  // namespace curvatroid::io
