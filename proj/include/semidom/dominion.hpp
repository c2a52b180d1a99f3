#pragma once
//
// Dominions of closed subsets, decided two independent ways:
//
//  * TensorClosure takes the equivalence closure of S^1 x S^1 pairs under
//    the relator family (xu, y) ~ (x, uy) for u in U; d is dominated by U
//    exactly when (d, 1) and (1, d) fall into one class. This is the finite
//    realization of zigzag equality, O(|S^1|^2 * |U|) union operations.
//
//  * zigzag_search hunts for an explicit chained factorization witness by
//    bounded search, shortest length first. It shares no code with the
//    closure and serves as its oracle and as the certificate producer.
//
// Saturation scanning enumerates prefix-embedding extensions of S and asks
// whether S is dense in any of them.
//

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semidom/core.hpp"
#include "semidom/enumerate.hpp"
#include "semidom/hcomm.hpp"
#include "semidom/relations.hpp"

namespace semidom {

/// A chained factorization of value d over the subset U: spine entries
/// a_0..a_2m lie in U, wings y_1..y_m and t_1..t_m lie outside it, and the
/// links satisfy
///   d = a_0 t_1,   a_0 = y_1 a_1,
///   a_(2i-1) t_i = a_(2i) t_(i+1),   y_i a_(2i) = y_(i+1) a_(2i+1),
///   a_(2m-1) t_m = a_2m,   d = y_m a_2m.
struct ZigzagWitness {
  element value = 0;
  std::size_t length = 0;               // m >= 1
  std::vector<element> spine;           // a_0 .. a_2m
  std::vector<element> left_wings;      // y_1 .. y_m
  std::vector<element> right_wings;     // t_1 .. t_m
};

/// Re-checks every witness invariant against the tables; pure verifier,
/// independent of how the witness was found. On failure the first violated
/// clause is written to *why when given.
inline bool validate_zigzag(const Semigroup& s, const SubsetHandle& u,
                            const ZigzagWitness& w, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) {
      *why = msg;
    }
    return false;
  };
  std::size_t m = w.length;
  if (m < 1) {
    return fail("length must be >= 1");
  }
  if (w.spine.size() != 2 * m + 1 || w.left_wings.size() != m ||
      w.right_wings.size() != m) {
    return fail("witness shape does not match its length");
  }
  if (w.value >= s.order()) {
    return fail("value out of range");
  }
  for (element a : w.spine) {
    if (a >= s.order() || !u.contains(a)) {
      return fail("spine entry " + std::to_string(a) + " is not in the subset");
    }
  }
  for (element y : w.left_wings) {
    if (y >= s.order() || u.contains(y)) {
      return fail("left wing " + std::to_string(y) + " is not outside the subset");
    }
  }
  for (element t : w.right_wings) {
    if (t >= s.order() || u.contains(t)) {
      return fail("right wing " + std::to_string(t) + " is not outside the subset");
    }
  }
  const auto& a = w.spine;
  const auto& y = w.left_wings;
  const auto& t = w.right_wings;
  if (s.at(a[0], t[0]) != w.value) {
    return fail("d = a_0 t_1 fails");
  }
  if (s.at(y[m - 1], a[2 * m]) != w.value) {
    return fail("d = y_m a_2m fails");
  }
  if (s.at(y[0], a[1]) != a[0]) {
    return fail("a_0 = y_1 a_1 fails");
  }
  if (s.at(a[2 * m - 1], t[m - 1]) != a[2 * m]) {
    return fail("a_(2m-1) t_m = a_2m fails");
  }
  for (std::size_t i = 1; i + 1 <= m; ++i) {
    if (s.at(a[2 * i - 1], t[i - 1]) != s.at(a[2 * i], t[i])) {
      return fail("a_(2i-1) t_i = a_(2i) t_(i+1) fails at i=" +
                  std::to_string(i));
    }
    if (s.at(y[i - 1], a[2 * i]) != s.at(y[i], a[2 * i + 1])) {
      return fail("y_i a_(2i) = y_(i+1) a_(2i+1) fails at i=" +
                  std::to_string(i));
    }
  }
  return true;
}

/// Equivalence closure of S^1 x S^1 pairs under (xu, y) ~ (x, uy), u in U.
/// Every union is logged, so a membership verdict can be replayed as an
/// explicit pair-rewriting chain.
///
/// The identity here is a fresh formal element at index order(), adjoined
/// even when S is a monoid: reusing an existing identity e would make
/// (e, e) ~ (e, e) declare e dominated by every subset, which is false (no
/// zigzag backs it, and a constant morphism separates e). The witness-search
/// convention of reusing an existing identity does not carry over to the
/// pair space.
class TensorClosure {
 public:
  TensorClosure(const Semigroup& s, const SubsetHandle& u)
      : s_(&s), m_(s.order() + 1), one_(static_cast<element>(s.order())) {
    if (!(u.parent() == s)) {
      throw NotClosedSubset("subset does not belong to this semigroup");
    }
    parent_.resize(m_ * m_);
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      parent_[i] = static_cast<std::uint32_t>(i);
    }
    edges_.resize(m_ * m_);
    for (element x = 0; x < m_; ++x) {
      for (element uu : u.members()) {
        element xu = mul1(x, uu);
        for (element yv = 0; yv < m_; ++yv) {
          std::uint32_t a = node(xu, yv);
          std::uint32_t b = node(x, mul1(uu, yv));
          if (a != b) {
            unite(a, b);
            edges_[a].push_back(b);
            edges_[b].push_back(a);
          }
        }
      }
    }
  }

  element formal_one() const noexcept { return one_; }

  bool same_pair(element x1, element y1, element x2, element y2) const {
    return find(node(x1, y1)) == find(node(x2, y2));
  }

  /// d is dominated by U iff (d, 1) ~ (1, d).
  bool member(element d) const {
    s_->check_index(d);
    return same_pair(d, one_, one_, d);
  }

  /// Shortest pair-rewriting chain from (d, 1) to (1, d) along logged
  /// relator applications. Empty when d is not a member.
  std::vector<std::pair<element, element>> chain(element d) const {
    s_->check_index(d);
    std::uint32_t from = node(d, one_);
    std::uint32_t to = node(one_, d);
    std::vector<std::int64_t> back(m_ * m_, -1);
    back[from] = from;
    std::deque<std::uint32_t> queue{from};
    while (!queue.empty() && back[to] < 0) {
      std::uint32_t v = queue.front();
      queue.pop_front();
      for (std::uint32_t w : edges_[v]) {
        if (back[w] < 0) {
          back[w] = v;
          queue.push_back(w);
        }
      }
    }
    std::vector<std::pair<element, element>> out;
    if (back[to] < 0) {
      return out;
    }
    for (std::uint32_t v = to;; v = static_cast<std::uint32_t>(back[v])) {
      out.emplace_back(static_cast<element>(v / m_), static_cast<element>(v % m_));
      if (v == from) {
        break;
      }
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  element mul1(element x, element yv) const noexcept {
    if (x == one_) {
      return yv;
    }
    if (yv == one_) {
      return x;
    }
    return s_->at(x, yv);
  }

  std::uint32_t node(element x, element yv) const noexcept {
    return static_cast<std::uint32_t>(x) * static_cast<std::uint32_t>(m_) + yv;
  }

  std::uint32_t find(std::uint32_t a) const {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (b < a) {
      std::swap(a, b);
    }
    parent_[b] = a;
  }

  const Semigroup* s_;
  std::size_t m_;
  element one_;
  mutable std::vector<std::uint32_t> parent_;
  std::vector<std::vector<std::uint32_t>> edges_;
};

/// Dom(U, S): all elements dominated by U, as a closed subset of S.
inline SubsetHandle dominion(const Semigroup& s, const SubsetHandle& u) {
  TensorClosure closure(s, u);
  std::vector<element> members;
  for (element d = 0; d < s.order(); ++d) {
    if (closure.member(d)) {
      members.push_back(d);
    }
  }
  return SubsetHandle(s, std::move(members));
}

inline bool is_closed(const Semigroup& s, const SubsetHandle& u) {
  return dominion(s, u).members() == u.members();
}

inline bool is_dense(const Semigroup& s, const SubsetHandle& u) {
  return dominion(s, u).size() == s.order();
}

namespace detail {

struct ZigzagSearchSpace {
  const Semigroup* s;
  const SubsetHandle* u;
  element d;
  std::vector<element> wings;  // S \ U, ascending
};

// Feasible wing sets are kept as ascending element lists; they stay tiny at
// the scales this search is meant for.
using WingSet = std::vector<element>;

inline WingSet initial_t(const ZigzagSearchSpace& sp, element a0) {
  WingSet out;
  for (element t : sp.wings) {
    if (sp.s->at(a0, t) == sp.d) {
      out.push_back(t);
    }
  }
  return out;
}

inline WingSet initial_y(const ZigzagSearchSpace& sp, element a0, element a1) {
  WingSet out;
  for (element y : sp.wings) {
    if (sp.s->at(y, a1) == a0) {
      out.push_back(y);
    }
  }
  return out;
}

// T_(i+1) = { t' : a_2i t' = a_(2i-1) t for some feasible t }
inline WingSet advance_t(const ZigzagSearchSpace& sp, const WingSet& ts,
                         element a_prev_odd, element a_even) {
  std::vector<char> targets(sp.s->order(), 0);
  for (element t : ts) {
    targets[sp.s->at(a_prev_odd, t)] = 1;
  }
  WingSet out;
  for (element t : sp.wings) {
    if (targets[sp.s->at(a_even, t)]) {
      out.push_back(t);
    }
  }
  return out;
}

// Y_(i+1) = { y' : y' a_(2i+1) = y a_2i for some feasible y }
inline WingSet advance_y(const ZigzagSearchSpace& sp, const WingSet& ys,
                         element a_even, element a_odd_next) {
  std::vector<char> targets(sp.s->order(), 0);
  for (element y : ys) {
    targets[sp.s->at(y, a_even)] = 1;
  }
  WingSet out;
  for (element y : sp.wings) {
    if (targets[sp.s->at(y, a_odd_next)]) {
      out.push_back(y);
    }
  }
  return out;
}

// Minimal zigzag length within the bound, by reachability over
// (a_(2i-1) t_i, y_i) states; 0 when none exists.
inline std::size_t minimal_zigzag_length(const ZigzagSearchSpace& sp,
                                         std::size_t max_length) {
  const Semigroup& s = *sp.s;
  const SubsetHandle& u = *sp.u;
  std::size_t n = s.order();
  std::vector<char> state(n * n, 0);  // state index r * n + y
  bool any = false;
  for (element a0 : u.members()) {
    for (element t1 : sp.wings) {
      if (s.at(a0, t1) != sp.d) {
        continue;
      }
      for (element a1 : u.members()) {
        for (element y1 : sp.wings) {
          if (s.at(y1, a1) == a0) {
            state[static_cast<std::size_t>(s.at(a1, t1)) * n + y1] = 1;
            any = true;
          }
        }
      }
    }
  }
  // Inverse product indices keep the level transition near-linear in the
  // number of live states.
  std::vector<std::vector<std::pair<element, element>>> by_right(n), by_left(n);
  for (element a : u.members()) {
    for (element w : sp.wings) {
      by_right[s.at(a, w)].emplace_back(a, w);  // (a_2i, t_(i+1))
      by_left[s.at(w, a)].emplace_back(a, w);   // (a_(2i+1), y_(i+1))
    }
  }
  for (std::size_t m = 1; m <= max_length && any; ++m) {
    for (element r = 0; r < n; ++r) {
      for (element yv = 0; yv < n; ++yv) {
        if (state[static_cast<std::size_t>(r) * n + yv] && u.contains(r) &&
            s.at(yv, r) == sp.d) {
          return m;
        }
      }
    }
    std::vector<char> next(n * n, 0);
    any = false;
    for (element r = 0; r < n; ++r) {
      for (element yv = 0; yv < n; ++yv) {
        if (!state[static_cast<std::size_t>(r) * n + yv]) {
          continue;
        }
        for (auto [ae, tn] : by_right[r]) {
          element w = s.at(yv, ae);
          for (auto [ao, yn] : by_left[w]) {
            std::size_t idx = static_cast<std::size_t>(s.at(ao, tn)) * n + yn;
            if (!next[idx]) {
              next[idx] = 1;
              any = true;
            }
          }
        }
      }
    }
    state.swap(next);
  }
  return 0;
}

// Depth-first search over spine positions in ascending value order; the
// first completed spine is therefore the lexicographically least one of
// this length. Wing feasibility sets are carried along and pruned exactly.
class SpineSearch {
 public:
  SpineSearch(const ZigzagSearchSpace& sp, std::size_t m, std::uint64_t budget)
      : sp_(sp), m_(m), budget_(budget) {}

  bool run(std::vector<element>& spine_out) {
    spine_.clear();
    tsets_.assign(1, {});
    ysets_.assign(1, {});
    bool found = descend(0);
    if (found) {
      spine_out = spine_;
    }
    return found;
  }

 private:
  bool descend(std::size_t pos) {
    if (++nodes_ > budget_) {
      throw CostGuard("zigzag spine search exceeded its node budget");
    }
    const Semigroup& s = *sp_.s;
    if (pos == 2 * m_) {
      // Final spine entry a_2m is forced: it must equal a_(2m-1) t_m for a
      // feasible t_m, lie in U, and satisfy y_m a_2m = d. Try candidates in
      // ascending order of the resulting element.
      std::vector<char> cand(s.order(), 0);
      for (element t : tsets_.back()) {
        cand[s.at(spine_.back(), t)] = 1;
      }
      for (element a = 0; a < s.order(); ++a) {
        if (!cand[a] || !sp_.u->contains(a)) {
          continue;
        }
        for (element yv : ysets_.back()) {
          if (s.at(yv, a) == sp_.d) {
            spine_.push_back(a);
            return true;
          }
        }
      }
      return false;
    }
    for (element a : sp_.u->members()) {
      spine_.push_back(a);
      bool ok = false;
      if (pos == 0) {
        WingSet t1 = initial_t(sp_, a);
        if (!t1.empty()) {
          tsets_.push_back(std::move(t1));
          ok = true;
        }
      } else if (pos == 1) {
        WingSet y1 = initial_y(sp_, spine_[0], a);
        if (!y1.empty()) {
          ysets_.push_back(std::move(y1));
          ok = true;
        }
      } else if (pos % 2 == 0) {
        WingSet tn = advance_t(sp_, tsets_.back(), spine_[pos - 1], a);
        if (!tn.empty()) {
          tsets_.push_back(std::move(tn));
          ok = true;
        }
      } else {
        WingSet yn = advance_y(sp_, ysets_.back(), spine_[pos - 1], a);
        if (!yn.empty()) {
          ysets_.push_back(std::move(yn));
          ok = true;
        }
      }
      if (ok) {
        if (descend(pos + 1)) {
          return true;
        }
        if (pos == 0 || (pos >= 2 && pos % 2 == 0)) {
          tsets_.pop_back();
        } else {
          ysets_.pop_back();
        }
      }
      spine_.pop_back();
    }
    return false;
  }

  const ZigzagSearchSpace& sp_;
  std::size_t m_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<element> spine_;
  std::vector<WingSet> tsets_;  // tsets_[i] = feasible t_i (1-based)
  std::vector<WingSet> ysets_;
};

// Lexicographically least wing assignment for a fixed spine, chosen greedily
// with exact forward feasibility. kind selects the chain.
inline std::vector<element> pick_wings(const ZigzagSearchSpace& sp,
                                       const std::vector<element>& spine,
                                       bool left_chain) {
  const Semigroup& s = *sp.s;
  std::size_t m = (spine.size() - 1) / 2;
  auto initial = [&]() {
    return left_chain ? initial_y(sp, spine[0], spine[1]) : initial_t(sp, spine[0]);
  };
  auto advance = [&](const WingSet& set, std::size_t i) {
    // from stage i to i+1 (1-based stages)
    return left_chain ? advance_y(sp, set, spine[2 * i], spine[2 * i + 1])
                      : advance_t(sp, set, spine[2 * i - 1], spine[2 * i]);
  };
  auto final_ok = [&](const WingSet& set) {
    for (element w : set) {
      if (left_chain ? s.at(w, spine[2 * m]) == sp.d
                     : s.at(spine[2 * m - 1], w) == spine[2 * m]) {
        return true;
      }
    }
    return false;
  };
  std::vector<element> chosen;
  WingSet current = initial();
  for (std::size_t stage = 1; stage <= m; ++stage) {
    element pick = 0;
    bool picked = false;
    for (element w : current) {
      WingSet probe{w};
      bool feasible = true;
      WingSet walk = probe;
      for (std::size_t k = stage; k < m && feasible; ++k) {
        walk = advance(walk, k);
        feasible = !walk.empty();
      }
      feasible = feasible && final_ok(walk);
      if (feasible) {
        pick = w;
        picked = true;
        break;
      }
    }
    if (!picked) {
      throw Error("internal: wing selection lost feasibility");
    }
    chosen.push_back(pick);
    if (stage < m) {
      current = advance(WingSet{pick}, stage);
    }
  }
  return chosen;
}

}  // namespace detail

/// Bounded witness search: shortest length first, then the lexicographically
/// least spine, then least wings. Absence within the bound is a normal
/// result and says nothing about membership by itself.
inline std::optional<ZigzagWitness> zigzag_search(const Semigroup& s,
                                                  const SubsetHandle& u,
                                                  element d,
                                                  std::size_t max_length,
                                                  std::uint64_t budget = 10'000'000) {
  s.check_index(d);
  if (max_length < 1) {
    throw IndexOutOfRange("max_length must be >= 1");
  }
  detail::ZigzagSearchSpace sp;
  sp.s = &s;
  sp.u = &u;
  sp.d = d;
  for (element e = 0; e < s.order(); ++e) {
    if (!u.contains(e)) {
      sp.wings.push_back(e);
    }
  }
  if (sp.wings.empty()) {
    return std::nullopt;
  }
  std::size_t m = detail::minimal_zigzag_length(sp, max_length);
  if (m == 0) {
    return std::nullopt;
  }
  detail::SpineSearch search(sp, m, budget);
  std::vector<element> spine;
  if (!search.run(spine)) {
    throw Error("internal: reachability and spine search disagree");
  }
  ZigzagWitness w;
  w.value = d;
  w.length = m;
  w.spine = spine;
  w.left_wings = detail::pick_wings(sp, spine, true);
  w.right_wings = detail::pick_wings(sp, spine, false);
  std::string why;
  if (!validate_zigzag(s, u, w, &why)) {
    throw Error("internal: search produced an invalid witness: " + why);
  }
  return w;
}

/// Dom(U, S) as a standalone semigroup must be H-commutative whenever U is;
/// a false return is a certified counterexample.
inline bool dominion_hc_check(const Semigroup& s, const SubsetHandle& u) {
  if (!is_h_commutative(u.materialize()).holds) {
    throw PreconditionFailed("subset is not H-commutative on its own");
  }
  return is_h_commutative(dominion(s, u).materialize()).holds;
}

/// Enumerates all order |S|+extra tables extending S's table in the leading
/// block and returns every extension in which S sits densely. H-commutative
/// finite input must always yield an empty list.
inline std::vector<Semigroup> saturation_scan(const Semigroup& s,
                                              std::size_t extra,
                                              std::uint64_t budget = 10'000'000) {
  std::vector<Semigroup> dense;
  std::vector<element> prefix;
  for (element e = 0; e < s.order(); ++e) {
    prefix.push_back(e);
  }
  extensions(s, extra, [&](const Semigroup& t) {
    SubsetHandle copy(t, prefix);
    if (is_dense(t, copy)) {
      dense.push_back(t);
    }
    return true;
  }, budget);
  return dense;
}

/// Desk-scale verification that an H-commutative archimedean semigroup with
/// an idempotent is saturated: principal right ideal power chains stabilize
/// (finiteness guarantees this; the indices are computable via
/// principal_right_ideal_stabilization) and no dense one-element extension
/// exists.
inline bool archimedean_saturation_check(const Semigroup& s) {
  if (!is_h_commutative(s).holds) {
    throw PreconditionFailed("input is not H-commutative");
  }
  if (!is_archimedean(s)) {
    throw PreconditionFailed("input is not archimedean");
  }
  if (idempotents(s).empty()) {
    throw PreconditionFailed("input has no idempotent");
  }
  for (element a = 0; a < s.order(); ++a) {
    principal_right_ideal_stabilization(s, a);
  }
  return saturation_scan(s, 1).empty();
}

}  // namespace semidom
