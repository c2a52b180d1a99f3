#pragma once
//
// Congruences: closure by worklist propagation, quotient construction, the
// least semilattice congruence and the least combinatorial congruence.
//

#include <cstddef>
#include <deque>
#include <utility>
#include <vector>

#include "semidom/core.hpp"
#include "semidom/relations.hpp"

namespace semidom {

/// An equivalence on a semigroup's elements that is compatible with
/// multiplication on both sides.
struct Congruence {
  Partition partition;
  const Semigroup* parent = nullptr;

  bool same(element a, element b) const noexcept {
    return partition.same_block(a, b);
  }
};

inline bool is_congruence(const Semigroup& s, const Partition& p) {
  if (p.size() != s.order()) {
    throw IndexOutOfRange("partition size does not match semigroup order");
  }
  for (auto& block : p.blocks) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      element a = block[0], b = block[i];
      for (element c = 0; c < s.order(); ++c) {
        if (!p.same_block(s.at(c, a), s.at(c, b)) ||
            !p.same_block(s.at(a, c), s.at(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Least congruence containing the given pairs. Merging (a, b) enqueues
/// (ca, cb) and (ac, bc) for every c, to a fixpoint.
inline Congruence congruence_closure(
    const Semigroup& s, const std::vector<std::pair<element, element>>& pairs) {
  std::size_t n = s.order();
  detail::UnionFind uf(n);
  std::deque<std::pair<element, element>> work(pairs.begin(), pairs.end());
  for (auto& [a, b] : work) {
    s.check_index(a);
    s.check_index(b);
  }
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) {
      continue;
    }
    for (element c = 0; c < n; ++c) {
      work.emplace_back(s.at(c, a), s.at(c, b));
      work.emplace_back(s.at(a, c), s.at(b, c));
    }
  }
  return Congruence{uf.to_partition(), &s};
}

struct Quotient {
  Semigroup semigroup;
  std::vector<std::uint32_t> projection;  // element -> block id
};

/// Quotient semigroup on blocks; well-definedness is re-checked and a
/// violation reported as NotACongruence.
inline Quotient quotient(const Semigroup& s, const Congruence& k) {
  const Partition& p = k.partition;
  if (p.size() != s.order()) {
    throw IndexOutOfRange("congruence does not match semigroup order");
  }
  std::size_t m = p.block_count();
  std::vector<element> table(m * m, static_cast<element>(m));
  for (element a = 0; a < s.order(); ++a) {
    for (element b = 0; b < s.order(); ++b) {
      element block = p.class_of[s.at(a, b)];
      element& cell = table[p.class_of[a] * m + p.class_of[b]];
      if (cell == static_cast<element>(m)) {
        cell = block;
      } else if (cell != block) {
        throw NotACongruence("partition is not compatible with multiplication");
      }
    }
  }
  return Quotient{Semigroup(m, std::move(table)), p.class_of};
}

/// Least congruence whose quotient is a semilattice: the closure of all
/// pairs (a, a^2) and (ab, ba).
inline Congruence least_semilattice_congruence(const Semigroup& s) {
  std::vector<std::pair<element, element>> pairs;
  std::size_t n = s.order();
  pairs.reserve(n + n * n);
  for (element a = 0; a < n; ++a) {
    pairs.emplace_back(a, s.at(a, a));
  }
  for (element a = 0; a < n; ++a) {
    for (element b = 0; b < n; ++b) {
      pairs.emplace_back(s.at(a, b), s.at(b, a));
    }
  }
  Congruence eta = congruence_closure(s, pairs);
  StructureFlags f = classify(quotient(s, eta).semigroup);
  if (!f.is_semilattice) {
    throw Error("internal: semilattice congruence quotient is not a semilattice");
  }
  return eta;
}

/// Mutual power-divisibility classes: a ~ b iff each divides a power of the
/// other. Symmetrization of the archimedean division quasi-order.
inline Partition rho_partition(const Semigroup& s) {
  BinaryRelation lam = lambda_relation(s);
  std::size_t n = s.order();
  detail::UnionFind uf(n);
  for (element a = 0; a < n; ++a) {
    for (element b = static_cast<element>(a + 1); b < n; ++b) {
      if (lam.at(a, b) && lam.at(b, a)) {
        uf.unite(a, b);
      }
    }
  }
  return uf.to_partition();
}

/// Least congruence with an H-trivial quotient, by fixpoint: repeatedly
/// collapse H-related pairs of the current quotient, pulled back to S.
inline Congruence least_combinatorial_congruence(const Semigroup& s) {
  Congruence k{Partition::identity(s.order()), &s};
  for (;;) {
    Quotient q = quotient(s, k);
    GreenProfile g = green(q.semigroup);
    if (g.H.is_identity()) {
      return k;
    }
    std::vector<std::pair<element, element>> pairs;
    for (auto& block : k.partition.blocks) {
      for (std::size_t i = 1; i < block.size(); ++i) {
        pairs.emplace_back(block[0], block[i]);
      }
    }
    // One representative element per H-related pair of quotient blocks.
    std::vector<element> rep(k.partition.block_count());
    for (auto& block : k.partition.blocks) {
      rep[k.partition.class_of[block[0]]] = block[0];
    }
    for (auto& hblock : g.H.blocks) {
      for (std::size_t i = 1; i < hblock.size(); ++i) {
        pairs.emplace_back(rep[hblock[0]], rep[hblock[i]]);
      }
    }
    k = congruence_closure(s, pairs);
  }
}

/// One class of the least semilattice congruence, materialized standalone.
/// members doubles as the embedding: local index i is parent element
/// members[i].
struct EtaClass {
  std::vector<element> members;
  Semigroup semigroup;
};

inline std::vector<EtaClass> eta_classes(const Semigroup& s) {
  Congruence eta = least_semilattice_congruence(s);
  std::vector<EtaClass> out;
  out.reserve(eta.partition.block_count());
  for (auto& block : eta.partition.blocks) {
    SubsetHandle h(s, block);  // closed: the quotient is a band
    out.push_back(EtaClass{block, h.materialize()});
  }
  return out;
}

/// Closures of single pairs (a, b), a < b, deduplicated in first-seen order.
inline std::vector<Congruence> principal_congruences(const Semigroup& s) {
  std::vector<Congruence> out;
  std::size_t n = s.order();
  for (element a = 0; a < n; ++a) {
    for (element b = static_cast<element>(a + 1); b < n; ++b) {
      Congruence k = congruence_closure(s, {{a, b}});
      bool fresh = true;
      for (auto& seen : out) {
        fresh = fresh && !(seen.partition == k.partition);
      }
      if (fresh) {
        out.push_back(std::move(k));
      }
    }
  }
  return out;
}

}  // namespace semidom
