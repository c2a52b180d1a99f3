#pragma once
//
// semidom - computations on finite semigroups
//
// Cayley-table representation: validated construction, element arithmetic,
// identity/zero adjunction, and multiplication-closed subsets.
//

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semidom {

/// Index of an element within its owning semigroup; valid range is [0, order).
using element = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AssociativityViolation : public Error {
 public:
  AssociativityViolation(element i, element j, element k)
      : Error("associativity fails at (" + std::to_string(i) + ", " +
              std::to_string(j) + ", " + std::to_string(k) + ")"),
        i(i),
        j(j),
        k(k) {}
  element i, j, k;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class BadLabels : public Error {
 public:
  using Error::Error;
};

class EmptySeed : public Error {
 public:
  EmptySeed() : Error("closure seed must be non-empty") {}
};

class NotClosedSubset : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NotACongruence : public Error {
 public:
  using Error::Error;
};

class NotHCommutative : public Error {
 public:
  using Error::Error;
};

class InconsistentOrder : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class OrderOverflow : public Error {
 public:
  using Error::Error;
};

class CostGuard : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A finite semigroup given by its full multiplication table.
///
/// Construction validates associativity over all order^3 triples and rejects
/// out-of-range entries and duplicate/empty labels; there is no unchecked
/// constructor. Instances are immutable, so sharing across threads for
/// read-only analysis is safe. Equality compares order and table only;
/// labels are cosmetic.
class Semigroup {
 public:
  Semigroup(std::size_t order, std::vector<element> table,
            std::vector<std::string> labels = {})
      : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
    if (order_ == 0) {
      throw IndexOutOfRange("semigroup order must be positive");
    }
    if (table_.size() != order_ * order_) {
      throw IndexOutOfRange("table size " + std::to_string(table_.size()) +
                            " does not match order " + std::to_string(order_));
    }
    for (element v : table_) {
      if (v >= order_) {
        throw IndexOutOfRange("table entry " + std::to_string(v) +
                              " out of range for order " +
                              std::to_string(order_));
      }
    }
    if (!labels_.empty()) {
      if (labels_.size() != order_) {
        throw BadLabels("expected " + std::to_string(order_) + " labels, got " +
                        std::to_string(labels_.size()));
      }
      for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) {
          throw BadLabels("label " + std::to_string(i) + " is empty");
        }
        for (std::size_t j = i + 1; j < labels_.size(); ++j) {
          if (labels_[i] == labels_[j]) {
            throw BadLabels("duplicate label \"" + labels_[i] + "\"");
          }
        }
      }
    }
    // First failing triple in lexicographic (i, j, k) order.
    for (element i = 0; i < order_; ++i) {
      for (element j = 0; j < order_; ++j) {
        element ij = at(i, j);
        for (element k = 0; k < order_; ++k) {
          if (at(ij, k) != at(i, at(j, k))) {
            throw AssociativityViolation(i, j, k);
          }
        }
      }
    }
    identity_ = scan_identity();
    zero_ = scan_zero();
  }

  std::size_t order() const noexcept { return order_; }

  /// Unchecked table lookup; both arguments must be valid indices.
  element at(element a, element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  /// Bounds-checked product.
  element product(element a, element b) const {
    check_index(a);
    check_index(b);
    return at(a, b);
  }

  const std::vector<element>& table() const noexcept { return table_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(element a) const {
    return has_labels() ? labels_[a] : std::to_string(a);
  }

  /// Cached two-sided identity, if one exists.
  std::optional<element> identity() const noexcept { return identity_; }
  /// Cached two-sided zero, if one exists.
  std::optional<element> zero() const noexcept { return zero_; }

  bool operator==(const Semigroup& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
  }
  bool operator!=(const Semigroup& other) const noexcept {
    return !(*this == other);
  }

  void check_index(element a) const {
    if (a >= order_) {
      throw IndexOutOfRange("element " + std::to_string(a) +
                            " out of range for order " +
                            std::to_string(order_));
    }
  }

 private:
  std::optional<element> scan_identity() const {
    for (element e = 0; e < order_; ++e) {
      bool ok = true;
      for (element i = 0; i < order_ && ok; ++i) {
        ok = at(e, i) == i && at(i, e) == i;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<element> scan_zero() const {
    for (element z = 0; z < order_; ++z) {
      bool ok = true;
      for (element i = 0; i < order_ && ok; ++i) {
        ok = at(z, i) == z && at(i, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  std::size_t order_;
  std::vector<element> table_;
  std::vector<std::string> labels_;
  std::optional<element> identity_;
  std::optional<element> zero_;
};

inline Semigroup new_semigroup(std::size_t order, std::vector<element> table,
                               std::vector<std::string> labels = {}) {
  return Semigroup(order, std::move(table), std::move(labels));
}

inline element multiply(const Semigroup& s, element a, element b) {
  return s.product(a, b);
}

/// a^n by iterated multiplication; n = 0 is rejected (no empty products).
inline element power(const Semigroup& s, element a, std::uint64_t n) {
  s.check_index(a);
  if (n == 0) {
    throw IndexOutOfRange("exponent must be >= 1");
  }
  element acc = a;
  for (std::uint64_t i = 1; i < n; ++i) {
    acc = s.at(acc, a);
  }
  return acc;
}

/// A non-empty, multiplication-closed subset of a parent semigroup, with
/// members kept in strictly increasing index order. The handle stores a
/// reference; the parent must outlive it.
class SubsetHandle {
 public:
  SubsetHandle(const Semigroup& parent, std::vector<element> members)
      : parent_(&parent), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
    if (members_.empty()) {
      throw NotClosedSubset("subset must be non-empty");
    }
    for (element m : members_) {
      parent.check_index(m);
    }
    for (element a : members_) {
      for (element b : members_) {
        if (!contains_sorted(parent.at(a, b))) {
          throw NotClosedSubset(
              "subset not closed: " + std::to_string(a) + " * " +
              std::to_string(b) + " = " + std::to_string(parent.at(a, b)) +
              " is outside");
        }
      }
    }
  }

  const Semigroup& parent() const noexcept { return *parent_; }
  const std::vector<element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  bool contains(element e) const noexcept { return contains_sorted(e); }

  /// Position of e within members(); e must be a member.
  element position(element e) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), e);
    if (it == members_.end() || *it != e) {
      throw IndexOutOfRange("element " + std::to_string(e) +
                            " is not a subset member");
    }
    return static_cast<element>(it - members_.begin());
  }

  /// The subset as a standalone semigroup over re-based indices; new index i
  /// corresponds to parent element members()[i].
  Semigroup materialize() const {
    std::size_t n = members_.size();
    std::vector<element> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = position(parent_->at(members_[i], members_[j]));
      }
    }
    std::vector<std::string> labels;
    if (parent_->has_labels()) {
      labels.reserve(n);
      for (element m : members_) {
        labels.push_back(parent_->labels()[m]);
      }
    }
    return Semigroup(n, std::move(table), std::move(labels));
  }

  bool operator==(const SubsetHandle& other) const noexcept {
    return parent_ == other.parent_ && members_ == other.members_;
  }

 private:
  bool contains_sorted(element e) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), e);
  }

  const Semigroup* parent_;
  std::vector<element> members_;
};

/// Least multiplication-closed superset of seed, computed to a fixpoint.
inline SubsetHandle subsemigroup_closure(const Semigroup& s,
                                         const std::vector<element>& seed) {
  if (seed.empty()) {
    throw EmptySeed();
  }
  std::vector<char> in(s.order(), 0);
  std::vector<element> work;
  for (element e : seed) {
    s.check_index(e);
    if (!in[e]) {
      in[e] = 1;
      work.push_back(e);
    }
  }
  std::vector<element> have = work;
  while (!work.empty()) {
    element a = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < have.size(); ++i) {
      element b = have[i];
      for (element p : {s.at(a, b), s.at(b, a)}) {
        if (!in[p]) {
          in[p] = 1;
          work.push_back(p);
          have.push_back(p);
        }
      }
    }
  }
  std::vector<element> members;
  for (element e = 0; e < s.order(); ++e) {
    if (in[e]) {
      members.push_back(e);
    }
  }
  return SubsetHandle(s, std::move(members));
}

/// All e with e*e = e, ascending.
inline std::vector<element> idempotents(const Semigroup& s) {
  std::vector<element> out;
  for (element e = 0; e < s.order(); ++e) {
    if (s.at(e, e) == e) {
      out.push_back(e);
    }
  }
  return out;
}

/// Returns S unchanged when it already has an identity; otherwise the
/// order n+1 monoid with the new identity at index n.
inline Semigroup adjoin_identity(const Semigroup& s) {
  if (s.identity()) {
    return s;
  }
  std::size_t n = s.order(), m = n + 1;
  std::vector<element> table(m * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * m + j] = s.at(static_cast<element>(i), static_cast<element>(j));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    table[i * m + n] = static_cast<element>(i);
    table[n * m + i] = static_cast<element>(i);
  }
  std::vector<std::string> labels;
  if (s.has_labels()) {
    bool taken = false;
    for (auto& l : s.labels()) {
      taken = taken || l == "1";
    }
    if (!taken) {
      labels = s.labels();
      labels.push_back("1");
    }
  }
  return Semigroup(m, std::move(table), std::move(labels));
}

/// Order n+1 semigroup with a fresh two-sided zero at index n; applied even
/// when S already has a zero (the new zero is a distinct element).
inline Semigroup adjoin_zero(const Semigroup& s) {
  std::size_t n = s.order(), m = n + 1;
  std::vector<element> table(m * m, static_cast<element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * m + j] = s.at(static_cast<element>(i), static_cast<element>(j));
    }
  }
  std::vector<std::string> labels;
  if (s.has_labels()) {
    bool taken = false;
    for (auto& l : s.labels()) {
      taken = taken || l == "0";
    }
    if (!taken) {
      labels = s.labels();
      labels.push_back("0");
    }
  }
  return Semigroup(m, std::move(table), std::move(labels));
}

/// Multiplication in S^1: S itself when an identity exists, otherwise S with
/// one adjoined. The adjoined identity is addressed as index order(); an
/// existing identity keeps its index.
class SOne {
 public:
  explicit SOne(const Semigroup& s) : s_(&s) {
    if (auto e = s.identity()) {
      adjoined_ = false;
      one_ = *e;
    } else {
      adjoined_ = true;
      one_ = static_cast<element>(s.order());
    }
  }

  const Semigroup& base() const noexcept { return *s_; }
  bool adjoined() const noexcept { return adjoined_; }
  element one() const noexcept { return one_; }
  /// Number of elements of S^1.
  std::size_t size() const noexcept {
    return s_->order() + (adjoined_ ? 1 : 0);
  }

  element mul(element x, element y) const {
    if (adjoined_) {
      if (x == one_) {
        return y;
      }
      if (y == one_) {
        return x;
      }
    }
    return s_->at(x, y);
  }

  /// Candidate witnesses in search order: the identity of S^1 first, then
  /// every element of S by ascending index.
  std::vector<element> witness_candidates() const {
    std::vector<element> out;
    out.reserve(size() + (adjoined_ ? 0 : 1));
    out.push_back(one_);
    for (element x = 0; x < s_->order(); ++x) {
      out.push_back(x);
    }
    return out;
  }

 private:
  const Semigroup* s_;
  bool adjoined_;
  element one_;
};

struct StructureFlags {
  bool is_commutative;
  bool is_monoid;
  bool is_group;
  bool is_band;
  bool is_semilattice;
  bool is_regular;
};

inline StructureFlags classify(const Semigroup& s) {
  std::size_t n = s.order();
  StructureFlags f{};
  f.is_commutative = true;
  for (element a = 0; a < n && f.is_commutative; ++a) {
    for (element b = 0; b < n && f.is_commutative; ++b) {
      f.is_commutative = s.at(a, b) == s.at(b, a);
    }
  }
  f.is_monoid = s.identity().has_value();
  f.is_group = f.is_monoid;
  if (f.is_group) {
    element e = *s.identity();
    for (element a = 0; a < n && f.is_group; ++a) {
      bool inv = false;
      for (element b = 0; b < n && !inv; ++b) {
        inv = s.at(a, b) == e && s.at(b, a) == e;
      }
      f.is_group = inv;
    }
  }
  f.is_band = true;
  for (element a = 0; a < n && f.is_band; ++a) {
    f.is_band = s.at(a, a) == a;
  }
  f.is_semilattice = f.is_band && f.is_commutative;
  f.is_regular = true;
  for (element a = 0; a < n && f.is_regular; ++a) {
    bool found = false;
    for (element x = 0; x < n && !found; ++x) {
      found = s.at(s.at(a, x), a) == a;
    }
    f.is_regular = found;
  }
  return f;
}

}  // namespace semidom
