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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace curvatroid {

/// Index of a ground-set element, 0..n-1.
using Element = int;

/// Subset of a ground set of at most 64 elements, stored as a bitmask.
///
/// Ordering is lexicographic on the sorted element lists, which is the
/// canonical order used for every report and every tie-break.
class ElementSet {
 public:
  static constexpr int kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Element operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) bits_ |= bit(e);
  }

  static constexpr ElementSet singleton(Element e) { return ElementSet(bit(e)); }
  /// {0, ..., n-1}
  static constexpr ElementSet prefix(int n) {
    return ElementSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Element e) const { return (bits_ & bit(e)) != 0; }
  constexpr bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr Element front() const { return std::countr_zero(bits_); }

  constexpr ElementSet with(Element e) const { return ElementSet(bits_ | bit(e)); }
  constexpr ElementSet without(Element e) const { return ElementSet(bits_ & ~bit(e)); }
  /// this - e + x
  constexpr ElementSet exchange(Element e, Element x) const { return without(e).with(x); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> elements() const { return {begin(), end()}; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) { return ElementSet(a.bits_ ^ b.bits_); }

  friend constexpr bool operator==(ElementSet a, ElementSet b) { return a.bits_ == b.bits_; }

  friend constexpr std::strong_ordering operator<=>(ElementSet a, ElementSet b) {
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    // Both sorted lists agree below the lowest differing element d. The set
    // holding d is smaller unless the other one has nothing left (a prefix).
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    const std::uint64_t d = diff & (~diff + 1);
    const std::uint64_t above = ~(d | (d - 1));
    if (a.bits_ & d) {
      return (b.bits_ & above) == 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return (a.bits_ & above) == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  static constexpr std::uint64_t bit(Element e) { return std::uint64_t{1} << e; }

  std::uint64_t bits_ = 0;
};

using BasisSet = ElementSet;

/// Calls f(subset) for every k-subset of {0, ..., n-1}, in increasing bitmask
/// order. Requires 0 <= k <= n < 64.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(ElementSet());
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  while (v < limit) {
    f(ElementSet(v));
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
}

}  // namespace curvatroid

template <>
struct std::hash<curvatroid::ElementSet> {
  std::size_t operator()(curvatroid::ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
