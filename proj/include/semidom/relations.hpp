#pragma once
//
// Divisibility, Green's relations and the archimedean division quasi-order.
//

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "semidom/core.hpp"

namespace semidom {

/// A partition of the element range [0, n). Block ids are dense from 0 in
/// order of least member; members within a block ascend.
struct Partition {
  std::vector<std::uint32_t> class_of;
  std::vector<std::vector<element>> blocks;

  std::size_t size() const noexcept { return class_of.size(); }
  std::size_t block_count() const noexcept { return blocks.size(); }

  bool same_block(element a, element b) const noexcept {
    return class_of[a] == class_of[b];
  }

  bool operator==(const Partition& other) const noexcept {
    return class_of == other.class_of;
  }
  bool operator!=(const Partition& other) const noexcept {
    return !(*this == other);
  }

  /// Canonical partition from an arbitrary id assignment.
  static Partition from_ids(const std::vector<std::uint32_t>& ids) {
    Partition p;
    std::size_t n = ids.size();
    p.class_of.assign(n, 0);
    std::map<std::uint32_t, std::uint32_t> remap;  // old id -> dense id
    for (std::size_t e = 0; e < n; ++e) {
      auto [it, fresh] = remap.emplace(ids[e], static_cast<std::uint32_t>(remap.size()));
      p.class_of[e] = it->second;
      if (fresh) {
        p.blocks.emplace_back();
      }
      p.blocks[it->second].push_back(static_cast<element>(e));
    }
    return p;
  }

  static Partition identity(std::size_t n) {
    std::vector<std::uint32_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return from_ids(ids);
  }

  static Partition universal(std::size_t n) {
    return from_ids(std::vector<std::uint32_t>(n, 0));
  }

  bool is_identity() const noexcept { return blocks.size() == size(); }
  bool is_universal() const noexcept { return blocks.size() == 1; }

  /// True when every block of this partition lies inside a block of coarser.
  bool refines(const Partition& other) const {
    for (auto& block : blocks) {
      for (std::size_t i = 1; i < block.size(); ++i) {
        if (!other.same_block(block[0], block[i])) {
          return false;
        }
      }
    }
    return true;
  }

  /// Common refinement (meet).
  static Partition meet(const Partition& a, const Partition& b) {
    std::size_t n = a.size();
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> pairs;
    std::vector<std::uint32_t> ids(n);
    for (std::size_t e = 0; e < n; ++e) {
      auto key = std::make_pair(a.class_of[e], b.class_of[e]);
      auto [it, _] = pairs.emplace(key, static_cast<std::uint32_t>(pairs.size()));
      ids[e] = it->second;
    }
    return from_ids(ids);
  }
};

struct GreenProfile {
  Partition L, R, H, D, J;
};

/// Dense boolean relation over element pairs.
struct BinaryRelation {
  std::size_t n = 0;
  std::vector<std::uint8_t> bits;

  explicit BinaryRelation(std::size_t order = 0) : n(order), bits(order * order, 0) {}

  bool at(element a, element b) const noexcept { return bits[a * n + b] != 0; }
  void set(element a, element b, bool v = true) noexcept {
    bits[a * n + b] = v ? 1 : 0;
  }
};

namespace detail {

// Principal ideal membership masks, one 64-bit word per 64 elements.
using Bitset = std::vector<std::uint64_t>;

inline Bitset make_bitset(std::size_t n) { return Bitset((n + 63) / 64, 0); }
inline void bit_set(Bitset& b, element e) { b[e >> 6] |= std::uint64_t{1} << (e & 63); }
inline bool bit_get(const Bitset& b, element e) {
  return (b[e >> 6] >> (e & 63)) & 1;
}

// aS^1 = {a} u aS
inline Bitset right_ideal(const Semigroup& s, element a) {
  Bitset b = make_bitset(s.order());
  bit_set(b, a);
  for (element x = 0; x < s.order(); ++x) {
    bit_set(b, s.at(a, x));
  }
  return b;
}

// S^1a = {a} u Sa
inline Bitset left_ideal(const Semigroup& s, element a) {
  Bitset b = make_bitset(s.order());
  bit_set(b, a);
  for (element x = 0; x < s.order(); ++x) {
    bit_set(b, s.at(x, a));
  }
  return b;
}

// S^1 a S^1 = aS^1 u S(aS^1)
inline Bitset two_sided_ideal(const Semigroup& s, element a) {
  std::size_t n = s.order();
  Bitset b = right_ideal(s, a);
  Bitset out = b;
  for (element w = 0; w < n; ++w) {
    if (!bit_get(b, w)) {
      continue;
    }
    for (element x = 0; x < n; ++x) {
      bit_set(out, s.at(x, w));
    }
  }
  return out;
}

inline Partition partition_by_key(const std::vector<Bitset>& keys) {
  std::map<Bitset, std::uint32_t> seen;
  std::vector<std::uint32_t> ids(keys.size());
  for (std::size_t e = 0; e < keys.size(); ++e) {
    auto [it, _] = seen.emplace(keys[e], static_cast<std::uint32_t>(seen.size()));
    ids[e] = it->second;
  }
  return Partition::from_ids(ids);
}

// Plain union-find over element indices.
struct UnionFind {
  std::vector<element> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  element find(element a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool unite(element a, element b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (b < a) {
      std::swap(a, b);
    }
    parent[b] = a;
    return true;
  }
  Partition to_partition() {
    std::vector<std::uint32_t> ids(parent.size());
    for (element e = 0; e < parent.size(); ++e) {
      ids[e] = find(e);
    }
    return Partition::from_ids(ids);
  }
};

}  // namespace detail

inline bool left_divides(const Semigroup& s, element a, element b) {
  s.check_index(a);
  s.check_index(b);
  if (a == b) {
    return true;
  }
  for (element x = 0; x < s.order(); ++x) {
    if (s.at(a, x) == b) {
      return true;
    }
  }
  return false;
}

inline bool right_divides(const Semigroup& s, element a, element b) {
  s.check_index(a);
  s.check_index(b);
  if (a == b) {
    return true;
  }
  for (element x = 0; x < s.order(); ++x) {
    if (s.at(x, a) == b) {
      return true;
    }
  }
  return false;
}

/// Two-sided divisibility: b lies in S^1 a S^1.
inline bool divides(const Semigroup& s, element a, element b) {
  s.check_index(a);
  s.check_index(b);
  return detail::bit_get(detail::two_sided_ideal(s, a), b);
}

/// Green's relations from principal-ideal equality: L from S^1a, R from aS^1,
/// H as the meet of L and R, J from S^1aS^1, D as the transitive closure of
/// L union R. On finite input D = J always; this is asserted.
inline GreenProfile green(const Semigroup& s) {
  std::size_t n = s.order();
  std::vector<detail::Bitset> lkeys(n), rkeys(n), jkeys(n);
  for (element a = 0; a < n; ++a) {
    lkeys[a] = detail::left_ideal(s, a);
    rkeys[a] = detail::right_ideal(s, a);
    jkeys[a] = detail::two_sided_ideal(s, a);
  }
  GreenProfile g;
  g.L = detail::partition_by_key(lkeys);
  g.R = detail::partition_by_key(rkeys);
  g.J = detail::partition_by_key(jkeys);
  g.H = Partition::meet(g.L, g.R);
  detail::UnionFind uf(n);
  for (auto& block : g.L.blocks) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      uf.unite(block[0], block[i]);
    }
  }
  for (auto& block : g.R.blocks) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      uf.unite(block[0], block[i]);
    }
  }
  g.D = uf.to_partition();
  if (g.D != g.J) {
    throw Error("internal: D and J disagree on a finite semigroup");
  }
  return g;
}

inline bool green_coincide(const Semigroup& s) {
  GreenProfile g = green(s);
  return g.L == g.R && g.R == g.H && g.H == g.D && g.D == g.J;
}

/// Regular elements (a = axa for some x). The set is guaranteed closed under
/// multiplication only for special classes of input, so closure is reported
/// rather than assumed.
struct RegularElements {
  std::vector<element> members;
  bool closed = false;

  bool empty() const noexcept { return members.empty(); }
  SubsetHandle handle(const Semigroup& s) const {
    if (!closed) {
      throw NotClosedSubset("regular elements do not form a subsemigroup here");
    }
    return SubsetHandle(s, members);
  }
};

inline RegularElements regular_elements(const Semigroup& s) {
  RegularElements out;
  std::size_t n = s.order();
  std::vector<char> in(n, 0);
  for (element a = 0; a < n; ++a) {
    for (element x = 0; x < n; ++x) {
      if (s.at(s.at(a, x), a) == a) {
        in[a] = 1;
        out.members.push_back(a);
        break;
      }
    }
  }
  out.closed = !out.members.empty();
  for (element a : out.members) {
    for (element b : out.members) {
      if (!in[s.at(a, b)]) {
        out.closed = false;
      }
    }
  }
  return out;
}

/// Natural partial order on idempotents: e <= f iff ef = fe = e.
inline bool natural_leq(const Semigroup& s, element e, element f) {
  s.check_index(e);
  s.check_index(f);
  if (s.at(e, e) != e) {
    throw NotIdempotent("element " + std::to_string(e) + " is not idempotent");
  }
  if (s.at(f, f) != f) {
    throw NotIdempotent("element " + std::to_string(f) + " is not idempotent");
  }
  return s.at(e, f) == e && s.at(f, e) == e;
}

namespace detail {

// The distinct powers a, a^2, ... in exponent order (eventual periodicity
// bounds the list by |S|).
inline std::vector<element> distinct_powers(const Semigroup& s, element a) {
  std::vector<char> seen(s.order(), 0);
  std::vector<element> out;
  element p = a;
  while (!seen[p]) {
    seen[p] = 1;
    out.push_back(p);
    p = s.at(p, a);
  }
  return out;
}

}  // namespace detail

/// matrix[a][b] = true iff a divides some power b^n (two-sided); exponents
/// range over the distinct powers of b only.
inline BinaryRelation lambda_relation(const Semigroup& s) {
  std::size_t n = s.order();
  std::vector<detail::Bitset> ideal(n);
  for (element a = 0; a < n; ++a) {
    ideal[a] = detail::two_sided_ideal(s, a);
  }
  BinaryRelation rel(n);
  for (element b = 0; b < n; ++b) {
    auto powers = detail::distinct_powers(s, b);
    for (element a = 0; a < n; ++a) {
      for (element p : powers) {
        if (detail::bit_get(ideal[a], p)) {
          rel.set(a, b);
          break;
        }
      }
    }
  }
  return rel;
}

/// Archimedean test with independent exponents on each side: every a divides
/// some power of every b both as a left divisor and as a right divisor.
inline bool is_archimedean(const Semigroup& s) {
  std::size_t n = s.order();
  std::vector<detail::Bitset> right(n), left(n);
  for (element a = 0; a < n; ++a) {
    right[a] = detail::right_ideal(s, a);
    left[a] = detail::left_ideal(s, a);
  }
  for (element b = 0; b < n; ++b) {
    auto powers = detail::distinct_powers(s, b);
    for (element a = 0; a < n; ++a) {
      bool l = false, r = false;
      for (element p : powers) {
        l = l || detail::bit_get(right[a], p);
        r = r || detail::bit_get(left[a], p);
      }
      if (!l || !r) {
        return false;
      }
    }
  }
  return true;
}

/// Variant requiring one power of b that a divides on both sides at once;
/// equivalent to is_archimedean (a common exponent can always be assembled
/// from one-sided ones), kept as a cross-check.
inline bool is_archimedean_common_exponent(const Semigroup& s) {
  std::size_t n = s.order();
  std::vector<detail::Bitset> right(n), left(n);
  for (element a = 0; a < n; ++a) {
    right[a] = detail::right_ideal(s, a);
    left[a] = detail::left_ideal(s, a);
  }
  for (element b = 0; b < n; ++b) {
    auto powers = detail::distinct_powers(s, b);
    for (element a = 0; a < n; ++a) {
      bool both = false;
      for (element p : powers) {
        both = both || (detail::bit_get(right[a], p) && detail::bit_get(left[a], p));
      }
      if (!both) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace semidom
