#pragma once
//
// Text formats: "smg v1" multiplication-table documents and zigzag
// certificates. Writers emit the canonical form; parse/write round-trips
// are byte-identical on canonical input.
//

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "semidom/core.hpp"
#include "semidom/dominion.hpp"

namespace semidom {

namespace detail {

inline std::vector<std::string> significant_lines(std::istream& in,
                                                  std::string* first_raw) {
  std::vector<std::string> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first && first_raw) {
      *first_raw = line;
    }
    first = false;
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') {
      continue;
    }
    out.push_back(line);
  }
  return out;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) {
    out.push_back(t);
  }
  return out;
}

inline element parse_index(const std::string& tok, std::size_t bound,
                           const std::string& what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad " + what + " \"" + tok + "\"");
  }
  if (pos != tok.size() || v >= bound) {
    throw ParseError("bad " + what + " \"" + tok + "\"");
  }
  return static_cast<element>(v);
}

}  // namespace detail

/// Parses an smg v1 document:
///   line 1: exactly `smg 1`
///   `order N`, then optionally `labels L0 .. L(N-1)`, then N table rows.
/// `#` starts a comment line; blank lines are ignored.
inline Semigroup parse_smg(std::istream& in) {
  std::string first_raw;
  auto lines = detail::significant_lines(in, &first_raw);
  if (first_raw != "smg 1") {
    throw ParseError("first line must be exactly \"smg 1\"");
  }
  if (lines.empty() || lines[0] != "smg 1") {
    throw ParseError("missing smg header");
  }
  std::size_t at = 1;
  if (at >= lines.size()) {
    throw ParseError("missing order line");
  }
  auto order_toks = detail::tokens(lines[at]);
  if (order_toks.size() != 2 || order_toks[0] != "order") {
    throw ParseError("expected \"order N\", got \"" + lines[at] + "\"");
  }
  unsigned long n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoul(order_toks[1], &pos);
    if (pos != order_toks[1].size()) {
      throw ParseError("bad order");
    }
  } catch (const std::exception&) {
    throw ParseError("bad order \"" + order_toks[1] + "\"");
  }
  if (n < 1) {
    throw ParseError("order must be >= 1");
  }
  ++at;
  std::vector<std::string> labels;
  if (at < lines.size()) {
    auto toks = detail::tokens(lines[at]);
    if (!toks.empty() && toks[0] == "labels") {
      if (toks.size() != n + 1) {
        throw ParseError("labels line must carry exactly " + std::to_string(n) +
                         " labels");
      }
      labels.assign(toks.begin() + 1, toks.end());
      ++at;
    }
  }
  std::vector<element> table;
  table.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row, ++at) {
    if (at >= lines.size()) {
      throw ParseError("missing table row " + std::to_string(row));
    }
    auto toks = detail::tokens(lines[at]);
    if (toks.size() != n) {
      throw ParseError("table row " + std::to_string(row) + " has " +
                       std::to_string(toks.size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (auto& tok : toks) {
      table.push_back(detail::parse_index(tok, n, "table entry"));
    }
  }
  if (at != lines.size()) {
    throw ParseError("unexpected trailing content: \"" + lines[at] + "\"");
  }
  return Semigroup(n, std::move(table), std::move(labels));
}

inline Semigroup parse_smg(const std::string& text) {
  std::istringstream in(text);
  return parse_smg(in);
}

inline std::string write_smg(const Semigroup& s) {
  std::ostringstream out;
  out << "smg 1\n";
  out << "order " << s.order() << "\n";
  if (s.has_labels()) {
    out << "labels";
    for (auto& l : s.labels()) {
      out << " " << l;
    }
    out << "\n";
  }
  for (std::size_t i = 0; i < s.order(); ++i) {
    for (std::size_t j = 0; j < s.order(); ++j) {
      if (j) {
        out << " ";
      }
      out << s.at(static_cast<element>(i), static_cast<element>(j));
    }
    out << "\n";
  }
  return out.str();
}

struct Certificate {
  ZigzagWitness witness;
  std::vector<element> subset;
};

inline std::string write_certificate(const ZigzagWitness& w,
                                     const SubsetHandle& u) {
  std::ostringstream out;
  out << "zigzag value=" << w.value << " m=" << w.length << "\n";
  out << "spine";
  for (element a : w.spine) {
    out << " " << a;
  }
  out << "\nywings";
  for (element y : w.left_wings) {
    out << " " << y;
  }
  out << "\ntwings";
  for (element t : w.right_wings) {
    out << " " << t;
  }
  out << "\nsubset";
  for (element m : u.members()) {
    out << " " << m;
  }
  out << "\n";
  return out.str();
}

/// Parses a certificate; element bounds are checked against the given
/// semigroup order. Witness validity is the caller's check (validate_zigzag
/// against the subset).
inline Certificate parse_certificate(const std::string& text,
                                     std::size_t order) {
  std::istringstream in(text);
  auto lines = detail::significant_lines(in, nullptr);
  if (lines.size() != 5) {
    throw ParseError("certificate must have 5 lines");
  }
  Certificate cert;
  {
    auto toks = detail::tokens(lines[0]);
    if (toks.size() != 3 || toks[0] != "zigzag" ||
        toks[1].rfind("value=", 0) != 0 || toks[2].rfind("m=", 0) != 0) {
      throw ParseError("bad certificate header \"" + lines[0] + "\"");
    }
    cert.witness.value =
        detail::parse_index(toks[1].substr(6), order, "certificate value");
    cert.witness.length = detail::parse_index(
        toks[2].substr(2), static_cast<std::size_t>(order) * order + 1,
        "certificate length");
    if (cert.witness.length < 1) {
      throw ParseError("certificate length must be >= 1");
    }
  }
  auto read_list = [&](const std::string& line, const std::string& head,
                       std::size_t expect) {
    auto toks = detail::tokens(line);
    if (toks.empty() || toks[0] != head) {
      throw ParseError("expected \"" + head + "\" line");
    }
    if (toks.size() != expect + 1) {
      throw ParseError(head + " line must carry " + std::to_string(expect) +
                       " entries");
    }
    std::vector<element> out;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      out.push_back(detail::parse_index(toks[i], order, head + " entry"));
    }
    return out;
  };
  std::size_t m = cert.witness.length;
  cert.witness.spine = read_list(lines[1], "spine", 2 * m + 1);
  cert.witness.left_wings = read_list(lines[2], "ywings", m);
  cert.witness.right_wings = read_list(lines[3], "twings", m);
  {
    auto toks = detail::tokens(lines[4]);
    if (toks.empty() || toks[0] != "subset") {
      throw ParseError("expected \"subset\" line");
    }
    for (std::size_t i = 1; i < toks.size(); ++i) {
      cert.subset.push_back(detail::parse_index(toks[i], order, "subset entry"));
    }
  }
  return cert;
}

}  // namespace semidom
