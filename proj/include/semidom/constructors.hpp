#pragma once
//
// Named constructions: monogenic semigroups, small symmetric groups, direct
// products, 0-direct unions, and the library's built-in example semigroups.
//

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "semidom/core.hpp"

namespace semidom {

/// Monogenic semigroup <a : a^m = a^(m+r)> of order m+r-1; element i
/// (0-based) denotes a^(i+1).
inline Semigroup monogenic(std::size_t index, std::size_t period) {
  if (index < 1 || period < 1) {
    throw IndexOutOfRange("monogenic index and period must be >= 1");
  }
  std::size_t n = index + period - 1;
  std::vector<element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t exp = i + j + 2;  // exponent of a^(i+1) * a^(j+1)
      if (exp > n) {
        exp = index + (exp - index) % period;
      }
      table[i * n + j] = static_cast<element>(exp - 1);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  labels.push_back("a");
  for (std::size_t i = 2; i <= n; ++i) {
    labels.push_back("a^" + std::to_string(i));
  }
  return Semigroup(n, std::move(table), std::move(labels));
}

namespace detail {

inline std::vector<std::vector<element>> permutations_lex(std::size_t n) {
  std::vector<element> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = static_cast<element>(i);
  }
  std::vector<std::vector<element>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace detail

/// Symmetric group on {1..n} for n <= 5. Elements are all permutations in
/// lexicographic one-line order; the product p*q acts left to right
/// ((p*q)(i) = q(p(i))).
inline Semigroup symmetric_group(std::size_t n) {
  if (n < 1 || n > 5) {
    throw UnsupportedOrder("symmetric_group supports n in [1, 5], got " +
                           std::to_string(n));
  }
  auto perms = detail::permutations_lex(n);
  std::size_t m = perms.size();
  std::vector<std::size_t> rank_of;  // encoded one-line -> index
  {
    std::size_t codes = 1;
    for (std::size_t i = 0; i < n; ++i) {
      codes *= n;
    }
    rank_of.assign(codes, 0);
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t code = 0;
      for (element v : perms[i]) {
        code = code * n + v;
      }
      rank_of[code] = i;
    }
  }
  std::vector<element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t code = 0;
      for (std::size_t x = 0; x < n; ++x) {
        code = code * n + perms[j][perms[i][x]];
      }
      table[i * m + j] = static_cast<element>(rank_of[code]);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (auto& p : perms) {
    std::string l;
    for (element v : p) {
      l += std::to_string(v + 1);
    }
    labels.push_back(l);
  }
  return Semigroup(m, std::move(table), std::move(labels));
}

/// Componentwise product of order |S|*|T|; the pair (i, j) sits at index
/// i*|T|+j. Guarded by a result-order cap so desk-scale tooling cannot be
/// asked for unworkably large tables.
inline Semigroup direct_product(const Semigroup& s, const Semigroup& t,
                                std::size_t max_order = 4096) {
  std::size_t ns = s.order(), nt = t.order();
  if (ns > max_order / nt || ns * nt > max_order) {
    throw OrderOverflow("direct product order " + std::to_string(ns) + "*" +
                        std::to_string(nt) + " exceeds cap " +
                        std::to_string(max_order));
  }
  std::size_t n = ns * nt;
  std::vector<element> table(n * n);
  for (std::size_t i1 = 0; i1 < ns; ++i1) {
    for (std::size_t j1 = 0; j1 < nt; ++j1) {
      for (std::size_t i2 = 0; i2 < ns; ++i2) {
        for (std::size_t j2 = 0; j2 < nt; ++j2) {
          std::size_t lhs = i1 * nt + j1;
          std::size_t rhs = i2 * nt + j2;
          element pi = s.at(static_cast<element>(i1), static_cast<element>(i2));
          element pj = t.at(static_cast<element>(j1), static_cast<element>(j2));
          table[lhs * n + rhs] =
              static_cast<element>(static_cast<std::size_t>(pi) * nt + pj);
        }
      }
    }
  }
  std::vector<std::string> labels;
  if (s.has_labels() && t.has_labels()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < ns; ++i) {
      for (std::size_t j = 0; j < nt; ++j) {
        labels.push_back("(" + s.labels()[i] + "," + t.labels()[j] + ")");
      }
    }
  }
  return Semigroup(n, std::move(table), std::move(labels));
}

/// 0-direct union of order |S|+|T|+1: products within each factor as before,
/// all cross products and products with the new zero equal the new zero.
/// Index layout: S first, then T, then 0 last.
inline Semigroup zero_direct_union(const Semigroup& s, const Semigroup& t) {
  std::size_t ns = s.order(), nt = t.order();
  std::size_t n = ns + nt + 1;
  element zero = static_cast<element>(n - 1);
  std::vector<element> table(n * n, zero);
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < ns; ++j) {
      table[i * n + j] = s.at(static_cast<element>(i), static_cast<element>(j));
    }
  }
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      table[(ns + i) * n + (ns + j)] = static_cast<element>(
          ns + t.at(static_cast<element>(i), static_cast<element>(j)));
    }
  }
  std::vector<std::string> labels;
  if (s.has_labels() && t.has_labels()) {
    labels = s.labels();
    labels.insert(labels.end(), t.labels().begin(), t.labels().end());
    labels.push_back("0");
    bool distinct = true;
    for (std::size_t i = 0; i < labels.size() && distinct; ++i) {
      for (std::size_t j = i + 1; j < labels.size() && distinct; ++j) {
        distinct = labels[i] != labels[j];
      }
    }
    if (!distinct) {
      labels.clear();
    }
  }
  return Semigroup(n, std::move(table), std::move(labels));
}

enum class Fixture { ex33_S, ex35_U, ex35_T, ex36_etaclass };

inline const std::array<std::pair<Fixture, const char*>, 4>& fixture_names() {
  static const std::array<std::pair<Fixture, const char*>, 4> names{{
      {Fixture::ex33_S, "ex33_S"},
      {Fixture::ex35_U, "ex35_U"},
      {Fixture::ex35_T, "ex35_T"},
      {Fixture::ex36_etaclass, "ex36_etaclass"},
  }};
  return names;
}

inline std::string fixture_name(Fixture f) {
  for (auto& [fx, name] : fixture_names()) {
    if (fx == f) {
      return name;
    }
  }
  throw IndexOutOfRange("unknown fixture");
}

inline Fixture fixture_from_name(const std::string& name) {
  for (auto& [fx, n] : fixture_names()) {
    if (name == n) {
      return fx;
    }
  }
  throw IndexOutOfRange("unknown fixture \"" + name + "\"");
}

/// Built-in example semigroups, addressable by stable name from the CLI.
inline Semigroup fixture(Fixture f) {
  switch (f) {
    case Fixture::ex33_S:
      return zero_direct_union(monogenic(3, 1), symmetric_group(3));
    case Fixture::ex35_U:
      return zero_direct_union(adjoin_identity(monogenic(3, 1)),
                               symmetric_group(3));
    case Fixture::ex35_T: {
      Semigroup u = fixture(Fixture::ex35_U);
      return direct_product(u, u);
    }
    case Fixture::ex36_etaclass:
      return direct_product(monogenic(3, 1), symmetric_group(3));
  }
  throw IndexOutOfRange("unknown fixture");
}

}  // namespace semidom
