#pragma once
//
// H-commutativity: witness search over S^1, whole-semigroup verdicts, the
// Clifford (semilattice-of-groups) equivalence profile, and power/idempotent
// witnesses used by the saturation machinery.
//

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "semidom/congruence.hpp"
#include "semidom/core.hpp"
#include "semidom/relations.hpp"

namespace semidom {

struct HcVerdict {
  bool holds = false;
  /// Lexicographically first ordered pair with no witness, when !holds.
  std::optional<std::pair<element, element>> counterexample;
};

/// Smallest x in S^1 with ab = bxa, scanning the identity of S^1 first and
/// then elements by ascending index. The adjoined identity, when S has none
/// of its own, is reported as index order().
inline std::optional<element> hc_witness(const Semigroup& s, element a,
                                         element b) {
  s.check_index(a);
  s.check_index(b);
  SOne s1(s);
  element ab = s.at(a, b);
  for (element x : s1.witness_candidates()) {
    if (s1.mul(s1.mul(b, x), a) == ab) {
      return x;
    }
  }
  return std::nullopt;
}

/// Checks ab = bxa solvability for every ordered pair.
inline HcVerdict is_h_commutative(const Semigroup& s) {
  SOne s1(s);
  auto candidates = s1.witness_candidates();
  for (element a = 0; a < s.order(); ++a) {
    for (element b = 0; b < s.order(); ++b) {
      element ab = s.at(a, b);
      bool found = false;
      for (element x : candidates) {
        if (s1.mul(s1.mul(b, x), a) == ab) {
          found = true;
          break;
        }
      }
      if (!found) {
        return HcVerdict{false, std::make_pair(a, b)};
      }
    }
  }
  return HcVerdict{true, std::nullopt};
}

/// The equivalent classical condition: ab H ba for every ordered pair.
inline HcVerdict is_h_commutative_tully(const Semigroup& s) {
  GreenProfile g = green(s);
  for (element a = 0; a < s.order(); ++a) {
    for (element b = 0; b < s.order(); ++b) {
      if (!g.H.same_block(s.at(a, b), s.at(b, a))) {
        return HcVerdict{false, std::make_pair(a, b)};
      }
    }
  }
  return HcVerdict{true, std::nullopt};
}

/// Every idempotent commutes with every element.
inline bool idempotents_central(const Semigroup& s) {
  for (element e : idempotents(s)) {
    for (element a = 0; a < s.order(); ++a) {
      if (s.at(e, a) != s.at(a, e)) {
        return false;
      }
    }
  }
  return true;
}

struct HQuotientReport {
  bool h_is_congruence = false;
  /// Present only when the H partition is a congruence.
  std::optional<bool> quotient_commutative;
};

inline HQuotientReport h_congruence_commutative_quotient(const Semigroup& s) {
  GreenProfile g = green(s);
  HQuotientReport r;
  r.h_is_congruence = is_congruence(s, g.H);
  if (r.h_is_congruence) {
    Quotient q = quotient(s, Congruence{g.H, &s});
    r.quotient_commutative = classify(q.semigroup).is_commutative;
  }
  return r;
}

/// Five independently computed conditions, each equivalent to S being a
/// semilattice of groups:
///   equational              a = axa and ab = bya solvable with x, y in S
///   hc_regular              H-commutative and regular
///   hc_quotient_regular     H-commutative with regular S/H
///   semilattice_of_groups   every class of the least semilattice congruence
///                           is a group
///   h_equals_eta            the H partition equals the eta partition
struct CliffordProfile {
  bool equational = false;
  bool hc_regular = false;
  bool hc_quotient_regular = false;
  bool semilattice_of_groups = false;
  bool h_equals_eta = false;

  bool all_equal() const noexcept {
    return equational == hc_regular && hc_regular == hc_quotient_regular &&
           hc_quotient_regular == semilattice_of_groups &&
           semilattice_of_groups == h_equals_eta;
  }
};

inline CliffordProfile clifford_profile(const Semigroup& s) {
  std::size_t n = s.order();
  CliffordProfile p;

  p.equational = true;
  for (element a = 0; a < n && p.equational; ++a) {
    bool inner = false;
    for (element x = 0; x < n && !inner; ++x) {
      inner = s.at(s.at(a, x), a) == a;
    }
    p.equational = inner;
  }
  for (element a = 0; a < n && p.equational; ++a) {
    for (element b = 0; b < n && p.equational; ++b) {
      element ab = s.at(a, b);
      bool inner = false;
      for (element y = 0; y < n && !inner; ++y) {
        inner = s.at(s.at(b, y), a) == ab;
      }
      p.equational = inner;
    }
  }

  bool hc = is_h_commutative(s).holds;
  StructureFlags flags = classify(s);
  p.hc_regular = hc && flags.is_regular;

  p.hc_quotient_regular = false;
  if (hc) {
    GreenProfile g = green(s);
    if (is_congruence(s, g.H)) {
      Quotient q = quotient(s, Congruence{g.H, &s});
      p.hc_quotient_regular = classify(q.semigroup).is_regular;
    }
  }

  p.semilattice_of_groups = true;
  for (auto& cls : eta_classes(s)) {
    p.semilattice_of_groups =
        p.semilattice_of_groups && classify(cls.semigroup).is_group;
  }

  p.h_equals_eta =
      green(s).H == least_semilattice_congruence(s).partition;
  return p;
}

/// Smallest exponent r with a^r S^1 = a^(2r) S^1; finite input always
/// stabilizes within the element's power index.
inline std::uint32_t principal_right_ideal_stabilization(const Semigroup& s,
                                                         element a) {
  s.check_index(a);
  for (std::uint32_t r = 1;; ++r) {
    element ar = power(s, a, r);
    element a2r = power(s, a, 2 * r);
    if (detail::right_ideal(s, ar) == detail::right_ideal(s, a2r)) {
      return r;
    }
  }
}

/// Certifies that some power of a sits in a group H-class: a^r c is
/// idempotent and H-related to a^r.
struct PowerWitness {
  element base = 0;
  std::uint32_t exponent = 0;
  element cofactor = 0;
};

inline PowerWitness power_idempotent_witness(const Semigroup& s, element a) {
  s.check_index(a);
  if (!is_h_commutative(s).holds) {
    throw NotHCommutative("power_idempotent_witness requires an H-commutative input");
  }
  std::uint32_t r = principal_right_ideal_stabilization(s, a);
  element ar = power(s, a, r);
  element a2r = power(s, a, 2 * r);
  std::optional<element> c;
  for (element x = 0; x < s.order(); ++x) {
    if (s.at(a2r, x) == ar) {
      c = x;
      break;
    }
  }
  if (!c) {
    throw Error("internal: stabilized power has no cofactor");
  }
  element arc = s.at(ar, *c);
  if (s.at(arc, arc) != arc || !green(s).H.same_block(ar, arc)) {
    throw Error("internal: power witness failed its own invariants");
  }
  return PowerWitness{a, r, *c};
}

/// Least idempotent e, under the natural partial order, with b = be = eb.
/// Absent when no idempotent fixes b two-sidedly; InconsistentOrder when the
/// fixing set has no least element (cannot happen on H-commutative input).
inline std::optional<element> minimal_idempotent_divisor(const Semigroup& s,
                                                         element b) {
  s.check_index(b);
  std::vector<element> fixing;
  for (element e : idempotents(s)) {
    if (s.at(b, e) == b && s.at(e, b) == b) {
      fixing.push_back(e);
    }
  }
  if (fixing.empty()) {
    return std::nullopt;
  }
  for (element e : fixing) {
    bool least = true;
    for (element f : fixing) {
      least = least && natural_leq(s, e, f);
    }
    if (least) {
      return e;
    }
  }
  throw InconsistentOrder("idempotent divisors of " + std::to_string(b) +
                          " have no least element");
}

/// Per-class analysis of the least semilattice decomposition.
struct EtaClassReport {
  std::vector<element> members;
  bool archimedean = false;
  std::size_t idempotent_count = 0;
  bool group = false;
  bool hc = false;
};

inline std::vector<EtaClassReport> eta_class_report(const Semigroup& s) {
  std::vector<EtaClassReport> out;
  for (auto& cls : eta_classes(s)) {
    EtaClassReport r;
    r.members = cls.members;
    r.archimedean = is_archimedean(cls.semigroup);
    r.idempotent_count = idempotents(cls.semigroup).size();
    r.group = classify(cls.semigroup).is_group;
    r.hc = is_h_commutative(cls.semigroup).holds;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace semidom
