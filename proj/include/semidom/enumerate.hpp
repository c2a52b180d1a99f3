#pragma once
//
// Exhaustive generation of small semigroups, their closed subsets, and
// prefix-embedding extensions. Streams are deterministic: cells fill
// row-major, values ascend, so two runs yield identical sequences.
//

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "semidom/core.hpp"
#include "semidom/hcomm.hpp"

namespace semidom {

enum class SemigroupFilter { none, hc, monoid, commutative, regular };

inline const char* filter_name(SemigroupFilter f) {
  switch (f) {
    case SemigroupFilter::none: return "none";
    case SemigroupFilter::hc: return "hc";
    case SemigroupFilter::monoid: return "monoid";
    case SemigroupFilter::commutative: return "commutative";
    case SemigroupFilter::regular: return "regular";
  }
  return "none";
}

inline SemigroupFilter filter_from_name(const std::string& name) {
  for (SemigroupFilter f : {SemigroupFilter::none, SemigroupFilter::hc,
                            SemigroupFilter::monoid, SemigroupFilter::commutative,
                            SemigroupFilter::regular}) {
    if (name == filter_name(f)) {
      return f;
    }
  }
  throw IndexOutOfRange("unknown filter \"" + name + "\"");
}

inline bool filter_accepts(SemigroupFilter f, const Semigroup& s) {
  switch (f) {
    case SemigroupFilter::none: return true;
    case SemigroupFilter::hc: return is_h_commutative(s).holds;
    case SemigroupFilter::monoid: return s.identity().has_value();
    case SemigroupFilter::commutative: return classify(s).is_commutative;
    case SemigroupFilter::regular: return classify(s).is_regular;
  }
  return true;
}

struct EnumerationSpec {
  std::size_t order = 1;
  SemigroupFilter filter = SemigroupFilter::none;
  std::uint64_t budget = 1'000'000'000;
  /// Orders above 5 sit beyond the desk tier and need an explicit opt-in.
  bool allow_above_desk = false;
};

/// Visitors return false to stop early.
using SemigroupVisitor = std::function<bool(const Semigroup&)>;
using SubsetVisitor = std::function<bool(const SubsetHandle&)>;

namespace detail {

// Backtracking search over partial multiplication tables. Cells fill
// row-major; after each placement every associativity triple whose four
// cells are now determined and involve the new cell is re-checked.
class TableSearch {
 public:
  TableSearch(std::size_t n, std::uint64_t budget)
      : n_(n),
        budget_(budget),
        table_(n * n, 0),
        filled_(n * n, 0),
        pairs_by_value_(n) {}

  // Pre-fill a cell (leading-block embedding). Must be called before run().
  void fix(std::size_t i, std::size_t j, element v) {
    std::size_t c = i * n_ + j;
    table_[c] = v;
    filled_[c] = 1;
    pairs_by_value_[v].push_back(c);
  }

  // Streams every completion of the prefix in lexicographic cell order.
  // The visitor returns false to stop.
  void run(const std::function<bool(const std::vector<element>&)>& visit) {
    for (std::size_t c = 0; c < filled_.size(); ++c) {
      if (filled_[c] && !consistent_around(c)) {
        return;  // prefix itself is contradictory
      }
    }
    stop_ = false;
    visit_ = &visit;
    descend(0);
    visit_ = nullptr;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void descend(std::size_t c) {
    if (stop_) {
      return;
    }
    while (c < filled_.size() && filled_[c]) {
      ++c;
    }
    if (c == filled_.size()) {
      stop_ = !(*visit_)(table_);
      return;
    }
    for (element v = 0; v < n_ && !stop_; ++v) {
      if (++nodes_ > budget_) {
        throw BudgetExceeded("table search exceeded its node budget");
      }
      table_[c] = v;
      filled_[c] = 1;
      pairs_by_value_[v].push_back(c);
      if (consistent_around(c)) {
        descend(c + 1);
      }
      pairs_by_value_[v].pop_back();
      filled_[c] = 0;
    }
  }

  bool triple_holds(element x, element y, element z) const {
    std::size_t xy = static_cast<std::size_t>(x) * n_ + y;
    std::size_t yz = static_cast<std::size_t>(y) * n_ + z;
    if (!filled_[xy] || !filled_[yz]) {
      return true;  // not yet determined
    }
    std::size_t pz = static_cast<std::size_t>(table_[xy]) * n_ + z;
    std::size_t xq = static_cast<std::size_t>(x) * n_ + table_[yz];
    if (!filled_[pz] || !filled_[xq]) {
      return true;
    }
    return table_[pz] == table_[xq];
  }

  // Checks all triples in which cell c can participate: as (x,y), as (y,z),
  // as ((xy),z) via the value index, or as (x,(yz)) likewise.
  bool consistent_around(std::size_t c) const {
    element i = static_cast<element>(c / n_);
    element j = static_cast<element>(c % n_);
    for (element z = 0; z < n_; ++z) {
      if (!triple_holds(i, j, z)) {
        return false;
      }
    }
    for (element x = 0; x < n_; ++x) {
      if (!triple_holds(x, i, j)) {
        return false;
      }
    }
    for (std::size_t cell : pairs_by_value_[i]) {
      if (!triple_holds(static_cast<element>(cell / n_),
                        static_cast<element>(cell % n_), j)) {
        return false;
      }
    }
    for (std::size_t cell : pairs_by_value_[j]) {
      if (!triple_holds(i, static_cast<element>(cell / n_),
                        static_cast<element>(cell % n_))) {
        return false;
      }
    }
    return true;
  }

  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  std::vector<element> table_;
  std::vector<char> filled_;
  std::vector<std::vector<std::size_t>> pairs_by_value_;
  const std::function<bool(const std::vector<element>&)>* visit_ = nullptr;
};

inline bool table_is_associative(const std::vector<element>& t, std::size_t n) {
  for (element i = 0; i < n; ++i) {
    for (element j = 0; j < n; ++j) {
      element ij = t[i * n + j];
      for (element k = 0; k < n; ++k) {
        if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

/// Every labeled associative table of the given order, exactly once, in
/// lexicographic table order.
inline void all_semigroups(const EnumerationSpec& spec,
                           const SemigroupVisitor& visit) {
  if (spec.order < 1 || spec.order > 6 ||
      (spec.order > 5 && !spec.allow_above_desk)) {
    throw CostGuard("enumeration order " + std::to_string(spec.order) +
                    " is outside the desk tier");
  }
  detail::TableSearch search(spec.order, spec.budget);
  search.run([&](const std::vector<element>& table) {
    Semigroup s(spec.order, table);
    if (!filter_accepts(spec.filter, s)) {
      return true;
    }
    return visit(s);
  });
}

inline std::uint64_t count_semigroups(const EnumerationSpec& spec) {
  std::uint64_t count = 0;
  all_semigroups(spec, [&](const Semigroup&) {
    ++count;
    return true;
  });
  return count;
}

/// Unpruned odometer generation, as a cross-check for the backtracker.
inline void all_semigroups_bruteforce(std::size_t order,
                                      const SemigroupVisitor& visit) {
  if (order < 1 || order > 3) {
    throw CostGuard("brute-force generation supports order <= 3");
  }
  std::size_t cells = order * order;
  std::vector<element> table(cells, 0);
  for (;;) {
    if (detail::table_is_associative(table, order)) {
      if (!visit(Semigroup(order, table))) {
        return;
      }
    }
    std::size_t c = cells;
    while (c > 0) {
      --c;
      if (++table[c] < order) {
        break;
      }
      table[c] = 0;
      if (c == 0) {
        return;
      }
    }
  }
}

/// Every non-empty multiplication-closed subset, ascending by
/// (size, member list).
inline void all_subsemigroups(const Semigroup& s, const SubsetVisitor& visit) {
  std::size_t n = s.order();
  if (n > 12) {
    throw CostGuard("subset scan supports order <= 12");
  }
  std::vector<element> combo;
  // Lexicographic k-combinations of [0, n) for each size k.
  for (std::size_t k = 1; k <= n; ++k) {
    combo.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      combo[i] = static_cast<element>(i);
    }
    for (;;) {
      bool closed = true;
      for (std::size_t i = 0; i < k && closed; ++i) {
        for (std::size_t j = 0; j < k && closed; ++j) {
          element p = s.at(combo[i], combo[j]);
          closed = std::binary_search(combo.begin(), combo.end(), p);
        }
      }
      if (closed && !visit(SubsetHandle(s, combo))) {
        return;
      }
      std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
      while (i >= 0 && combo[i] == static_cast<element>(n - k + i)) {
        --i;
      }
      if (i < 0) {
        break;
      }
      ++combo[i];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) {
        combo[j] = combo[j - 1] + 1;
      }
    }
  }
}

inline std::vector<SubsetHandle> closed_subsets(const Semigroup& s) {
  std::vector<SubsetHandle> out;
  all_subsemigroups(s, [&](const SubsetHandle& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

/// All associative tables of order |S|+extra whose leading block is S's
/// table, in lexicographic order over the free cells.
inline void extensions(const Semigroup& s, std::size_t extra,
                       const SemigroupVisitor& visit,
                       std::uint64_t budget = 10'000'000) {
  if (extra < 1 || extra > 2) {
    throw CostGuard("extension scan supports extra in {1, 2}");
  }
  std::size_t m = s.order() + extra;
  detail::TableSearch search(m, budget);
  for (element i = 0; i < s.order(); ++i) {
    for (element j = 0; j < s.order(); ++j) {
      search.fix(i, j, s.at(i, j));
    }
  }
  try {
    search.run([&](const std::vector<element>& table) {
      return visit(Semigroup(m, table));
    });
  } catch (const BudgetExceeded& e) {
    throw CostGuard(e.what());
  }
}

}  // namespace semidom
