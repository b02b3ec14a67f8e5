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
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "curvatroid/element_set.hpp"
#include "curvatroid/error.hpp"

namespace curvatroid {

/// A finite matroid given by its full basis family.
///
/// Elements are indices 0..n-1; the user-facing labels live in a sidecar
/// table. Immutable after construction.
class Matroid {
 public:
  /// Sorts and deduplicates `bases`. Throws EmptyBasisFamily or RankMismatch;
  /// the exchange axiom is not checked here (see validate_exchange_axiom).
  Matroid(std::vector<std::string> labels, std::vector<BasisSet> bases, std::string origin = "explicit")
      : labels_(std::move(labels)), bases_(std::move(bases)), origin_(std::move(origin)) {
    if (labels_.size() > static_cast<std::size_t>(ElementSet::kCapacity)) {
      throw Error(ErrorCode::kTooLarge, "ground sets are limited to 64 elements");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!label_index_.emplace(labels_[i], static_cast<Element>(i)).second) {
        throw Error(ErrorCode::kInvalidSpec, "duplicate element label '" + labels_[i] + "'");
      }
    }
    if (bases_.empty()) throw Error(ErrorCode::kEmptyBasisFamily, "a matroid needs at least one basis");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    rank_ = bases_.front().size();
    const ElementSet ground = ground_set();
    for (BasisSet b : bases_) {
      if (b.size() != rank_) {
        throw Error(ErrorCode::kRankMismatch, "bases of sizes " + std::to_string(rank_) + " and " +
                                                  std::to_string(b.size()));
      }
      if (!b.is_subset_of(ground)) throw Error(ErrorCode::kUnknownElement, "basis outside the ground set");
    }
    basis_index_.reserve(bases_.size());
    for (std::size_t i = 0; i < bases_.size(); ++i) basis_index_.emplace(bases_[i], i);
  }

  int ground_size() const { return static_cast<int>(labels_.size()); }
  int rank() const { return rank_; }
  ElementSet ground_set() const { return ElementSet::prefix(ground_size()); }
  const std::string& origin() const { return origin_; }

  /// Bases in canonical order.
  std::span<const BasisSet> bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }

  bool contains_basis(BasisSet s) const { return basis_index_.contains(s); }
  std::optional<std::size_t> index_of(BasisSet s) const {
    auto it = basis_index_.find(s);
    if (it == basis_index_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element e) const { return labels_.at(static_cast<std::size_t>(e)); }

  Element element(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) throw Error(ErrorCode::kUnknownElement, "no element labelled '" + label + "'");
    return it->second;
  }

  ElementSet to_set(std::span<const std::string> names) const {
    ElementSet s;
    for (const auto& name : names) s = s.with(element(name));
    return s;
  }

  std::vector<std::string> to_labels(ElementSet s) const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(s.size()));
    for (Element e : s) out.push_back(label(e));
    return out;
  }

  /// "{a,b,c}" with labels in element order.
  std::string format(ElementSet s) const {
    std::string out = "{";
    bool first = true;
    for (Element e : s) {
      if (!first) out += ',';
      out += label(e);
      first = false;
    }
    return out + "}";
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> label_index_;
  std::vector<BasisSet> bases_;
  std::unordered_map<BasisSet, std::size_t> basis_index_;
  std::string origin_;
  int rank_ = 0;
};

inline bool is_basis(const Matroid& m, ElementSet s) {
  if (!s.is_subset_of(m.ground_set())) throw Error(ErrorCode::kUnknownElement, "set outside the ground set");
  return s.size() == m.rank() && m.contains_basis(s);
}

inline bool is_basis(const Matroid& m, std::span<const std::string> labels) {
  return is_basis(m, m.to_set(labels));
}

/// N(b - u): every x such that b - u + x is a basis. Always contains u.
inline ElementSet exchange_neighborhood(const Matroid& m, BasisSet b, Element u) {
  if (!m.contains_basis(b)) throw Error(ErrorCode::kNotABasis, m.format(b) + " is not a basis");
  if (!b.contains(u)) throw Error(ErrorCode::kElementNotInBasis, "element " + std::to_string(u) + " not in basis");
  const BasisSet rest = b.without(u);
  ElementSet out;
  for (Element x : m.ground_set() - rest) {
    if (m.contains_basis(rest.with(x))) out = out.with(x);
  }
  return out;
}

/// Every unordered pair {S, T} with |S xor T| = 2, each exactly once, S < T,
/// in canonical order. Bases are bucketed by their (k-1)-subsets; two bases
/// are adjacent iff they share a bucket, and share exactly one.
inline std::vector<std::pair<BasisSet, BasisSet>> adjacent_basis_pairs(const Matroid& m) {
  std::unordered_map<ElementSet, std::vector<BasisSet>> buckets;
  buckets.reserve(m.basis_count() * static_cast<std::size_t>(std::max(m.rank(), 1)));
  for (BasisSet b : m.bases()) {
    for (Element u : b) buckets[b.without(u)].push_back(b);
  }
  std::vector<std::pair<BasisSet, BasisSet>> pairs;
  for (const auto& [key, members] : buckets) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        pairs.emplace_back(std::min(members[i], members[j]), std::max(members[i], members[j]));
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

/// A violation of the exchange axiom: no b2 in B2 \ B1 makes B1 - b1 + b2 a basis.
struct ExchangeWitness {
  BasisSet b1_set;
  BasisSet b2_set;
  Element b1;
};

struct ExchangeValidation {
  bool passed = true;
  std::optional<ExchangeWitness> witness;
  std::string detail;

  explicit operator bool() const noexcept { return passed; }
};

/// O(|B|^2 k^2). Scans (B1, B2, b1) in canonical order and reports the first
/// failure.
inline ExchangeValidation validate_exchange_axiom(const Matroid& m) {
  if (m.basis_count() == 0) return {false, std::nullopt, "empty basis family"};
  for (BasisSet b : m.bases()) {
    if (b.size() != m.rank()) return {false, std::nullopt, "bases of unequal size " + m.format(b)};
  }
  for (BasisSet first : m.bases()) {
    for (BasisSet second : m.bases()) {
      if (first == second) continue;
      for (Element out : first - second) {
        bool found = false;
        for (Element in : second - first) {
          if (m.contains_basis(first.exchange(out, in))) {
            found = true;
            break;
          }
        }
        if (!found) {
          return {false, ExchangeWitness{first, second, out},
                  "no exchange for " + m.label(out) + " from " + m.format(first) + " into " + m.format(second)};
        }
      }
    }
  }
  return {};
}

}  // namespace curvatroid
