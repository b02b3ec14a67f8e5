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
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "curvatroid/matroid.hpp"
#include "curvatroid/rational.hpp"
#include "curvatroid/transport.hpp"
#include "curvatroid/walk.hpp"

namespace curvatroid {

/// Adjacent bases S = shared + s and T = shared + t.
struct PairFrame {
  BasisSet S;
  BasisSet T;
  Element s = -1;
  Element t = -1;
  std::vector<Element> shared;

  PairFrame reversed() const { return {T, S, t, s, shared}; }
  friend bool operator==(const PairFrame&, const PairFrame&) = default;
};

/// Orientation follows the argument order: s is the element of S \ T.
inline PairFrame make_pair_frame(const Matroid& m, BasisSet S, BasisSet T) {
  if (!m.contains_basis(S)) throw Error(ErrorCode::kNotABasis, m.format(S) + " is not a basis");
  if (!m.contains_basis(T)) throw Error(ErrorCode::kNotABasis, m.format(T) + " is not a basis");
  if ((S ^ T).size() != 2) {
    throw Error(ErrorCode::kNotAdjacent, m.format(S) + " and " + m.format(T) + " do not differ by one exchange");
  }
  return {S, T, (S - T).front(), (T - S).front(), (S & T).elements()};
}

/// Exchange data of one shared element u.
struct SharedElementWitness {
  Element u = -1;
  ElementSet ns;  ///< N(S - u)
  ElementSet nt;  ///< N(T - u)
  bool in_j = false;
  ElementSet a_forward;  ///< (N(S-u) - t) \ N(T-u); empty unless in_j
  ElementSet a_reverse;  ///< (N(T-u) - s) \ N(S-u); empty unless in_j

  int size_ns() const { return ns.size(); }
  int size_nt() const { return nt.size(); }
  int size_cap() const { return (ns & nt).size(); }
};

struct PairWitness {
  ElementSet j;
  std::vector<SharedElementWitness> shared;  ///< frame.shared order

  const SharedElementWitness& at(Element u) const {
    for (const auto& w : shared) {
      if (w.u == u) return w;
    }
    throw Error(ErrorCode::kElementNotInBasis, "element " + std::to_string(u) + " is not shared");
  }
};

/// J = {u shared : t in N(S - u)} and the A_u sets, by direct enumeration.
inline PairWitness compute_pair_witness(const Matroid& m, const PairFrame& f) {
  PairWitness w;
  for (Element u : f.shared) {
    SharedElementWitness e;
    e.u = u;
    e.ns = exchange_neighborhood(m, f.S, u);
    e.nt = exchange_neighborhood(m, f.T, u);
    e.in_j = e.ns.contains(f.t);
    if (e.in_j) {
      w.j = w.j.with(u);
      e.a_forward = e.ns.without(f.t) - e.nt;
      e.a_reverse = e.nt.without(f.s) - e.ns;
    }
    w.shared.push_back(e);
  }
  return w;
}

/// Rank/size lower bound valid for every matroid of rank k on n elements.
inline Rational theorem_lb_global(int k, int n) {
  if (k < 1 || k >= n) {
    throw Error(ErrorCode::kInvalidRank,
                "need 1 <= k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  if (n == k + 1) return Rational(1, k);
  return Rational(-1) + Rational(2, k) + Rational(3 * (k - 1), k * (n - k + 1));
}

/// 1 - E d(X, Y) under the down-step coupling, in closed form.
///
/// Per u in J with a = max(#N(S-u), #N(T-u)), b = min, c = #(N(S-u) cap N(T-u)),
/// the coupled walks meet with probability 1/a, stay one apart with
/// probability c/a + (1/b - 1/a), and are two apart otherwise. Shared u outside
/// J always give distance 1 and dropping s/t gives 0.
inline Rational downstep_lb_pair(int k, const PairWitness& w) {
  Rational sum = 0;
  for (const auto& e : w.shared) {
    if (!e.in_j) continue;
    const int a = std::max(e.size_ns(), e.size_nt());
    const int b = std::min(e.size_ns(), e.size_nt());
    sum += Rational(1 + e.size_cap(), a) + Rational(1, b) - 1;
  }
  return Rational(1, k) + sum / k;
}

/// -#J/k + 1/k + (1/k) sum_{u in J} (2 + #cap) / max(#N(S-u), #N(T-u)).
///
/// Charges distance 2 to all unmatched mass, so it never exceeds
/// downstep_lb_pair and equals it when #N(S-u) = #N(T-u) on all of J.
inline Rational corollary_lb_pair(int k, const PairWitness& w) {
  Rational sum = 0;
  for (const auto& e : w.shared) {
    if (!e.in_j) continue;
    sum += Rational(2 + e.size_cap(), std::max(e.size_ns(), e.size_nt()));
  }
  return Rational(1 - w.j.size(), k) + sum / k;
}

struct TheoremUpperBound {
  Rational forward;  ///< in the frame's orientation
  Rational reverse;  ///< S and T swapped
  Rational value;    ///< min of the two
};

/// kappa <= 1/k + (1/k) sum_{u in J} (1/#N(T-u) - #A_u/#N(S-u)), in both
/// orientations.
inline TheoremUpperBound theorem_ub_pair(int k, const PairWitness& w) {
  Rational forward = 0;
  Rational reverse = 0;
  for (const auto& e : w.shared) {
    if (!e.in_j) continue;
    forward += Rational(1, e.size_nt()) - Rational(e.a_forward.size(), e.size_ns());
    reverse += Rational(1, e.size_ns()) - Rational(e.a_reverse.size(), e.size_nt());
  }
  TheoremUpperBound ub;
  ub.forward = Rational(1, k) + forward / k;
  ub.reverse = Rational(1, k) + reverse / k;
  ub.value = std::min(ub.forward, ub.reverse);
  return ub;
}

/// One cell of the down-step coupling: S drops drop_s and adds add_s, T drops
/// drop_t and adds add_t, jointly with probability `mass`.
struct CouplingRoute {
  Element drop_s = -1;
  Element drop_t = -1;
  Element add_s = -1;
  Element add_t = -1;
  BasisSet x;
  BasisSet y;
  Rational mass;
};

struct DownstepCoupling {
  PairFrame frame;
  std::vector<CouplingRoute> routes;

  /// Routes merged by their (X, Y) outcome.
  Coupling joint() const {
    Coupling c;
    for (const auto& r : routes) c.add(r.x, r.y, r.mass);
    return c;
  }
};

/// Matches the down-steps first (s with t, u with u), then the up-steps
/// (t with s, v with v on the common neighborhood). Leftover up-step mass is
/// paired proportionally, which keeps both marginals uniform.
inline DownstepCoupling build_downstep_coupling(const Matroid& m, const PairFrame& f) {
  const int k = m.rank();
  DownstepCoupling out{f, {}};

  const ElementSet common = exchange_neighborhood(m, f.S, f.s);
  for (Element x : common) {
    const BasisSet next = f.S.exchange(f.s, x);
    out.routes.push_back({f.s, f.t, x, x, next, next, Rational(1, k * common.size())});
  }

  for (Element u : f.shared) {
    const ElementSet ns = exchange_neighborhood(m, f.S, u);
    const ElementSet nt = exchange_neighborhood(m, f.T, u);
    if (ns.contains(f.t) != nt.contains(f.s)) {
      throw Error(ErrorCode::kInvalidSpec, "S-u+t and T-u+s disagree; basis family is not consistent");
    }
    const Rational ps(1, k * ns.size());
    const Rational pt(1, k * nt.size());
    std::map<Element, Rational> left_s;
    std::map<Element, Rational> left_t;
    for (Element x : ns) left_s[x] = ps;
    for (Element y : nt) left_t[y] = pt;

    auto match = [&](Element x, Element y) {
      const Rational mass = std::min(ps, pt);
      out.routes.push_back({u, u, x, y, f.S.exchange(u, x), f.T.exchange(u, y), mass});
      left_s[x] -= mass;
      left_t[y] -= mass;
    };
    if (ns.contains(f.t)) match(f.t, f.s);
    for (Element v : ns & nt) match(v, v);

    Rational remaining = 0;
    for (const auto& [x, r] : left_s) remaining += r;
    if (remaining == 0) continue;
    for (const auto& [x, rx] : left_s) {
      if (rx == 0) continue;
      for (const auto& [y, ry] : left_t) {
        if (ry == 0) continue;
        out.routes.push_back({u, u, x, y, f.S.exchange(u, x), f.T.exchange(u, y), rx * ry / remaining});
      }
    }
  }
  return out;
}

template <class Metric>
Rational downstep_coupling_expected_distance(const DownstepCoupling& c, Metric&& metric) {
  Rational sum = 0;
  for (const auto& r : c.routes) sum += r.mass * metric(r.x, r.y);
  return sum;
}

/// The lower bound read off an explicitly built coupling.
template <class Metric>
Rational downstep_lb_via_coupling(const Matroid& m, const PairFrame& f, Metric&& metric) {
  return Rational(1) - expected_distance(build_downstep_coupling(m, f).joint(), metric);
}

/// W1(P(S,.), P(T,.)) with an optimal coupling.
template <class Metric>
TransportSolution pair_transport(const Matroid& m, BasisSet S, BasisSet T, Metric&& metric) {
  return wasserstein1(
      make_transport_problem(transition_distribution(m, S), transition_distribution(m, T), metric));
}

/// 1 - W1(P(S,.), P(T,.)), with d(S, T) = 1.
template <class Metric>
Rational exact_pair_curvature(const Matroid& m, const PairFrame& f, Metric&& metric) {
  return Rational(1) - pair_transport(m, f.S, f.T, metric).value;
}

/// S - u + a must be at distance >= 2 from every neighbor of T other than
/// T - u + s, T - t + s and T - t + a.
template <class Metric>
ValidationResult proposition_distance_check(const Matroid& m, const PairFrame& f, const PairWitness& w, Element u,
                                            Element a, Metric&& metric) {
  const auto& e = w.at(u);
  if (!e.in_j) throw Error(ErrorCode::kInvalidSpec, "element " + m.label(u) + " is not in J");
  if (!e.a_forward.contains(a)) throw Error(ErrorCode::kInvalidSpec, "element " + m.label(a) + " is not in A_u");
  const BasisSet far = f.S.exchange(u, a);
  const BasisSet allowed[] = {f.T.exchange(u, f.s), f.T.exchange(f.t, f.s), f.T.exchange(f.t, a)};
  for (Element v : f.T) {
    for (Element y : exchange_neighborhood(m, f.T, v)) {
      const BasisSet near = f.T.exchange(v, y);
      if (std::find(std::begin(allowed), std::end(allowed), near) != std::end(allowed)) continue;
      if (metric(far, near) < 2) {
        return ValidationResult::fail(m.format(far) + " is within distance 1 of " + m.format(near));
      }
    }
  }
  return ValidationResult::pass();
}

/// Runs the check for every u in J and a in A_u. Vacuous when no A_u is
/// populated.
template <class Metric>
ValidationResult proposition_distance_check_all(const Matroid& m, const PairFrame& f, const PairWitness& w,
                                                Metric&& metric) {
  for (const auto& e : w.shared) {
    for (Element a : e.a_forward) {
      if (auto r = proposition_distance_check(m, f, w, e.u, a, metric); !r) return r;
    }
  }
  return ValidationResult::pass();
}

struct PairReport {
  PairFrame frame;
  PairWitness witness;
  std::optional<Rational> exact_kappa;
  Rational downstep_lb;
  Rational corollary_lb;
  TheoremUpperBound theorem_ub;
  std::optional<Rational> coupling_expected_distance;
};

/// Bounds always; the exact value and the coupling's expectation only when a
/// distance oracle is supplied.
inline PairReport analyze_pair(const Matroid& m, const PairFrame& f, const DistanceOracle* oracle) {
  PairReport r;
  r.frame = f;
  r.witness = compute_pair_witness(m, f);
  r.downstep_lb = downstep_lb_pair(m.rank(), r.witness);
  r.corollary_lb = corollary_lb_pair(m.rank(), r.witness);
  r.theorem_ub = theorem_ub_pair(m.rank(), r.witness);
  if (oracle != nullptr) {
    r.exact_kappa = exact_pair_curvature(m, f, *oracle);
    r.coupling_expected_distance = expected_distance(build_downstep_coupling(m, f).joint(), *oracle);
  }
  return r;
}

struct GlobalOptions {
  bool exact = true;
  /// Also minimise 1 - W/d over every pair of distinct bases.
  bool all_pairs = false;
  /// 0 = CURVATROID_THREADS or the hardware concurrency.
  unsigned threads = 0;
  bool keep_pairs = false;
};

struct GlobalReport {
  std::string origin;
  int ground_size = 0;
  int rank = 0;
  std::size_t basis_count = 0;
  std::size_t pair_count = 0;
  /// Single-basis matroid: no adjacent pairs, kappa reported as 1.
  bool degenerate = false;
  bool distance_shortcut_verified = false;

  std::optional<Rational> kappa_exact;
  std::optional<PairFrame> argmin_pair;
  std::optional<Rational> theorem_lb_global;
  std::optional<Rational> downstep_lb_global;
  std::optional<Rational> corollary_lb_global;
  std::optional<Rational> theorem_ub_global;
  std::optional<PairFrame> theorem_ub_argmin;
  std::optional<Rational> all_pairs_kappa;

  std::vector<PairReport> pairs;
};

inline unsigned worker_count(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CURVATROID_THREADS")) {
      const long cap = std::strtol(env, nullptr, 10);
      if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
    }
  }
  return std::max(1u, n);
}

namespace detail {

/// Runs job(i) for i in [0, count) on up to `threads` workers.
template <class Job>
void parallel_for(std::size_t count, unsigned threads, Job&& job) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// Minimum over adjacent pairs of exact kappa (when opts.exact) and of the
/// three bounds. Ties keep the canonically first pair.
inline GlobalReport global_curvature(const Matroid& m, const GlobalOptions& opts = {}) {
  GlobalReport g;
  g.origin = m.origin();
  g.ground_size = m.ground_size();
  g.rank = m.rank();
  g.basis_count = m.basis_count();
  if (m.rank() < m.ground_size()) g.theorem_lb_global = theorem_lb_global(m.rank(), m.ground_size());

  const auto pairs = adjacent_basis_pairs(m);
  g.pair_count = pairs.size();
  if (pairs.empty()) {
    g.degenerate = true;
    g.kappa_exact = Rational(1);
    return g;
  }

  std::optional<DistanceOracle> oracle;
  if (opts.exact || opts.all_pairs) {
    oracle.emplace(m);
    g.distance_shortcut_verified = oracle->shortcut_verified();
  }
  const DistanceOracle* metric = opts.exact ? &*oracle : nullptr;
  const unsigned threads = worker_count(opts.threads);

  std::vector<PairReport> reports(pairs.size());
  detail::parallel_for(pairs.size(), threads, [&](std::size_t i) {
    reports[i] = analyze_pair(m, make_pair_frame(m, pairs[i].first, pairs[i].second), metric);
  });

  auto keep_min = [](std::optional<Rational>& best, const Rational& v) {
    if (!best || v < *best) {
      best = v;
      return true;
    }
    return false;
  };
  for (const auto& r : reports) {
    if (r.exact_kappa && keep_min(g.kappa_exact, *r.exact_kappa)) g.argmin_pair = r.frame;
    keep_min(g.downstep_lb_global, r.downstep_lb);
    keep_min(g.corollary_lb_global, r.corollary_lb);
    if (keep_min(g.theorem_ub_global, r.theorem_ub.value)) g.theorem_ub_argmin = r.frame;
  }

  if (opts.all_pairs) {
    std::vector<std::pair<std::size_t, std::size_t>> all;
    for (std::size_t i = 0; i < m.basis_count(); ++i)
      for (std::size_t j = i + 1; j < m.basis_count(); ++j) all.emplace_back(i, j);
    std::vector<Rational> values(all.size());
    detail::parallel_for(all.size(), threads, [&](std::size_t i) {
      const BasisSet S = m.bases()[all[i].first];
      const BasisSet T = m.bases()[all[i].second];
      const Rational w = pair_transport(m, S, T, *oracle).value;
      values[i] = Rational(1) - w / (*oracle)(S, T);
    });
    for (const auto& v : values) keep_min(g.all_pairs_kappa, v);
  }

  if (opts.keep_pairs) g.pairs = std::move(reports);
  return g;
}

}  // namespace curvatroid
