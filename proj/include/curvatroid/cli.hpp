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

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "curvatroid/build.hpp"
#include "curvatroid/curvature.hpp"
#include "curvatroid/io.hpp"

namespace curvatroid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitParseError = 2;

struct CliConfig {
  /// validate | bases | pairs | curvature | pair | coupling | catalog
  std::string command;
  /// "named:<key>" or a path to a matroid description file.
  std::string input;
  std::string format = "json";
  bool exact = false;
  bool bounds_only = false;
  bool all_pairs = false;
  bool decimal = false;
  bool list_pairs = false;
  /// Comma-separated labels.
  std::string s;
  std::string t;
  unsigned threads = 0;
};

namespace detail {

inline BasisSet parse_basis_argument(const Matroid& m, const std::string& text, const char* flag) {
  std::vector<std::string> labels;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) labels.push_back(item);
  }
  BasisSet b;
  try {
    b = m.to_set(labels);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidBasisArgument, std::string(flag) + ": " + e.what());
  }
  if (!is_basis(m, b)) throw Error(ErrorCode::kInvalidBasisArgument, std::string(flag) + ": " + m.format(b) + " is not a basis");
  return b;
}

inline PairFrame frame_from_config(const Matroid& m, const CliConfig& cfg) {
  std::string s = cfg.s;
  std::string t = cfg.t;
  if (s.empty() && t.empty()) {
    constexpr std::string_view kPrefix = "named:";
    if (cfg.input.rfind(kPrefix, 0) == 0) {
      if (auto pair = catalog::distinguished_pair(cfg.input.substr(kPrefix.size()))) {
        auto join = [](const std::vector<std::string>& v) {
          std::string out;
          for (const auto& x : v) out += (out.empty() ? "" : ",") + x;
          return out;
        };
        s = join(pair->s);
        t = join(pair->t);
      }
    }
  }
  if (s.empty() || t.empty()) throw Error(ErrorCode::kInvalidBasisArgument, "--s and --t are required");
  const BasisSet S = parse_basis_argument(m, s, "--s");
  const BasisSet T = parse_basis_argument(m, t, "--t");
  try {
    return make_pair_frame(m, S, T);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidBasisArgument, e.what());
  }
}

inline void emit(io::Json doc, const CliConfig& cfg, std::ostream& out) {
  if (cfg.decimal) io::add_decimal_approximations(doc);
  if (cfg.format == "csv") {
    out << io::to_csv(doc);
  } else {
    out << doc.dump(2) << "\n";
  }
}

}  // namespace detail

/// Executes one command; the report goes to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 validation failure, 2 parse or argument error.
inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.format != "json" && cfg.format != "csv") {
      throw Error(ErrorCode::kParseError, "unknown format '" + cfg.format + "'");
    }
    if (cfg.command == "catalog") {
      io::Json list = io::Json::array();
      for (const auto& e : catalog::entries()) list.push_back({{"name", e.name}, {"description", e.description}});
      detail::emit(list, cfg, out);
      return kExitOk;
    }
    if (cfg.input.empty()) throw Error(ErrorCode::kParseError, "--input is required");
    const Matroid m = build_matroid(io::resolve_input(cfg.input));

    if (cfg.command == "validate") {
      const auto result = validate_exchange_axiom(m);
      detail::emit(io::to_json(m, result), cfg, out);
      if (!result) {
        err << "exchange axiom violated: " << result.detail << "\n";
        return kExitValidationFailed;
      }
      return kExitOk;
    }

    if (cfg.command == "bases") {
      io::Json bases = io::Json::array();
      for (BasisSet b : m.bases()) bases.push_back(io::labels_json(m, b));
      if (cfg.format == "csv") {
        io::Json rows = io::Json::array();
        for (const auto& b : bases) rows.push_back({{"basis", b}});
        detail::emit(rows, cfg, out);
      } else {
        detail::emit({{"n", m.ground_size()}, {"k", m.rank()}, {"count", m.basis_count()}, {"bases", bases}}, cfg, out);
      }
      return kExitOk;
    }

    if (cfg.command == "pairs") {
      const auto pairs = adjacent_basis_pairs(m);
      io::Json list = io::Json::array();
      for (const auto& [a, b] : pairs) list.push_back({{"S", io::labels_json(m, a)}, {"T", io::labels_json(m, b)}});
      if (cfg.format == "csv") {
        detail::emit(list, cfg, out);
      } else {
        detail::emit({{"count", pairs.size()}, {"pairs", list}}, cfg, out);
      }
      return kExitOk;
    }

    if (cfg.command == "curvature") {
      GlobalOptions opts;
      opts.exact = cfg.exact && !cfg.bounds_only;
      opts.all_pairs = cfg.all_pairs;
      opts.threads = cfg.threads;
      opts.keep_pairs = cfg.list_pairs;
      detail::emit(io::to_json(m, global_curvature(m, opts)), cfg, out);
      return kExitOk;
    }

    if (cfg.command == "pair") {
      const PairFrame f = detail::frame_from_config(m, cfg);
      std::optional<DistanceOracle> oracle;
      if (!cfg.bounds_only) oracle.emplace(m);
      const PairReport r = analyze_pair(m, f, oracle ? &*oracle : nullptr);
      io::Json doc = io::to_json(m, r);
      if (oracle) {
        const auto check = proposition_distance_check_all(m, f, r.witness, *oracle);
        doc["farNeighborCheck"] = check ? "pass" : "fail: " + check.detail;
      }
      detail::emit(doc, cfg, out);
      return kExitOk;
    }

    if (cfg.command == "coupling") {
      const PairFrame f = detail::frame_from_config(m, cfg);
      const DistanceOracle oracle(m);
      const DownstepCoupling c = build_downstep_coupling(m, f);
      const auto check = verify_coupling(c.joint(), transition_distribution(m, f.S), transition_distribution(m, f.T));
      if (cfg.format == "csv") {
        detail::emit(io::to_json(m, c, oracle)["routes"], cfg, out);
      } else {
        io::Json doc = io::to_json(m, c, oracle);
        doc["marginals"] = check ? "pass" : "fail: " + check.detail;
        detail::emit(doc, cfg, out);
      }
      if (!check) {
        err << "coupling marginals violated: " << check.detail << "\n";
        return kExitValidationFailed;
      }
      return kExitOk;
    }

    throw Error(ErrorCode::kParseError, "unknown command '" + cfg.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    // A well-formed description whose basis family is not a matroid.
    if (e.code() == ErrorCode::kRankMismatch || e.code() == ErrorCode::kEmptyBasisFamily) {
      return kExitValidationFailed;
    }
    return kExitParseError;
  }
}

}  // namespace curvatroid::cli
