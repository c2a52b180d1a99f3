#pragma once
//
// Report rendering shared by the CLI and the test suites. Text reports are
// key=value lines in a frozen key order; every report also has a JSON form.
//

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semidom/congruence.hpp"
#include "semidom/constructors.hpp"
#include "semidom/core.hpp"
#include "semidom/dominion.hpp"
#include "semidom/enumerate.hpp"
#include "semidom/hcomm.hpp"
#include "semidom/io.hpp"
#include "semidom/relations.hpp"

namespace semidom {

namespace detail {

inline const char* yesno(bool b) { return b ? "true" : "false"; }

inline std::string join_indices(const std::vector<element>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) {
      out << ",";
    }
    out << v[i];
  }
  return out.str();
}

}  // namespace detail

struct Report {
  std::string text;
  nlohmann::json json;
};

inline Report analysis_report(const Semigroup& s) {
  HcVerdict hc = is_h_commutative(s);
  bool coincide = green_coincide(s);
  bool central = idempotents_central(s);
  Congruence eta = least_semilattice_congruence(s);
  bool rho_eq = rho_partition(s) == eta.partition;
  CliffordProfile cp = clifford_profile(s);
  auto classes = eta_class_report(s);

  std::ostringstream out;
  nlohmann::json j;
  out << "order=" << s.order() << "\n";
  j["order"] = s.order();
  out << "is_hc=" << detail::yesno(hc.holds) << "\n";
  j["is_hc"] = hc.holds;
  if (!hc.holds) {
    out << "hc_counterexample=" << hc.counterexample->first << ","
        << hc.counterexample->second << "\n";
    j["hc_counterexample"] = {hc.counterexample->first,
                              hc.counterexample->second};
  }
  out << "green_coincide=" << detail::yesno(coincide) << "\n";
  j["green_coincide"] = coincide;
  out << "idempotents_central=" << detail::yesno(central) << "\n";
  j["idempotents_central"] = central;
  out << "eta_blocks=" << eta.partition.block_count() << "\n";
  j["eta_blocks"] = eta.partition.block_count();
  out << "rho_equals_eta=" << detail::yesno(rho_eq) << "\n";
  j["rho_equals_eta"] = rho_eq;
  // exponent bound actually used by the power-divisibility scans
  std::size_t power_bound = 0;
  for (element b = 0; b < s.order(); ++b) {
    power_bound = std::max(power_bound, detail::distinct_powers(s, b).size());
  }
  out << "lambda_power_bound=" << power_bound << "\n";
  j["lambda_power_bound"] = power_bound;
  out << "clifford_equational=" << detail::yesno(cp.equational) << "\n";
  out << "clifford_hc_regular=" << detail::yesno(cp.hc_regular) << "\n";
  out << "clifford_hc_quotient_regular=" << detail::yesno(cp.hc_quotient_regular)
      << "\n";
  out << "clifford_semilattice_of_groups="
      << detail::yesno(cp.semilattice_of_groups) << "\n";
  out << "clifford_h_equals_eta=" << detail::yesno(cp.h_equals_eta) << "\n";
  out << "clifford_all_equal=" << detail::yesno(cp.all_equal()) << "\n";
  j["clifford"] = {{"equational", cp.equational},
                   {"hc_regular", cp.hc_regular},
                   {"hc_quotient_regular", cp.hc_quotient_regular},
                   {"semilattice_of_groups", cp.semilattice_of_groups},
                   {"h_equals_eta", cp.h_equals_eta},
                   {"all_equal", cp.all_equal()}};
  j["eta_classes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    std::string prefix = "eta_class_" + std::to_string(i) + "_";
    out << prefix << "members=" << detail::join_indices(c.members) << "\n";
    out << prefix << "archimedean=" << detail::yesno(c.archimedean) << "\n";
    out << prefix << "idempotents=" << c.idempotent_count << "\n";
    out << prefix << "is_group=" << detail::yesno(c.group) << "\n";
    out << prefix << "is_hc=" << detail::yesno(c.hc) << "\n";
    j["eta_classes"].push_back({{"members", c.members},
                                {"archimedean", c.archimedean},
                                {"idempotents", c.idempotent_count},
                                {"is_group", c.group},
                                {"is_hc", c.hc}});
  }
  return Report{out.str(), std::move(j)};
}

inline Report dominion_report(const Semigroup& s, const SubsetHandle& u) {
  SubsetHandle dom = dominion(s, u);
  bool closed = dom.members() == u.members();
  bool dense = dom.size() == s.order();
  bool u_hc = is_h_commutative(u.materialize()).holds;

  std::ostringstream out;
  nlohmann::json j;
  out << "order=" << s.order() << "\n";
  j["order"] = s.order();
  out << "subset=" << detail::join_indices(u.members()) << "\n";
  j["subset"] = u.members();
  out << "dominion=" << detail::join_indices(dom.members()) << "\n";
  j["dominion"] = dom.members();
  out << "is_closed=" << detail::yesno(closed) << "\n";
  j["is_closed"] = closed;
  out << "is_dense=" << detail::yesno(dense) << "\n";
  j["is_dense"] = dense;
  if (u_hc) {
    bool dom_hc = is_h_commutative(dom.materialize()).holds;
    out << "dominion_is_hc=" << detail::yesno(dom_hc) << "\n";
    j["dominion_is_hc"] = dom_hc;
  }
  return Report{out.str(), std::move(j)};
}

inline Report enumeration_report(const EnumerationSpec& spec) {
  std::uint64_t count = count_semigroups(spec);
  std::ostringstream out;
  out << "order=" << spec.order << "\n";
  out << "filter=" << filter_name(spec.filter) << "\n";
  out << "count=" << count << "\n";
  nlohmann::json j{{"order", spec.order},
                   {"filter", filter_name(spec.filter)},
                   {"count", count}};
  return Report{out.str(), std::move(j)};
}

struct SaturationReport {
  Report report;
  std::size_t dense_count = 0;
};

inline SaturationReport saturation_report(const Semigroup& s, std::size_t extra,
                                          std::uint64_t budget = 10'000'000) {
  std::size_t checked = 0;
  std::vector<Semigroup> dense;
  std::vector<element> prefix;
  for (element e = 0; e < s.order(); ++e) {
    prefix.push_back(e);
  }
  extensions(s, extra, [&](const Semigroup& t) {
    ++checked;
    if (is_dense(t, SubsetHandle(t, prefix))) {
      dense.push_back(t);
    }
    return true;
  }, budget);

  std::ostringstream out;
  out << "order=" << s.order() << "\n";
  out << "extra=" << extra << "\n";
  out << "extensions=" << checked << "\n";
  out << "dense_extensions=" << dense.size() << "\n";
  nlohmann::json j{{"order", s.order()},
                   {"extra", extra},
                   {"extensions", checked},
                   {"dense_extensions", dense.size()}};
  return SaturationReport{Report{out.str(), std::move(j)}, dense.size()};
}

/// The built-in example reproduction suite: one named claim per check.
struct ExampleClaims {
  std::vector<std::pair<std::string, bool>> claims;

  bool all_pass() const {
    for (auto& [_, ok] : claims) {
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  Report render() const {
    std::ostringstream out;
    nlohmann::json j;
    j["claims"] = nlohmann::json::object();
    for (auto& [name, ok] : claims) {
      out << name << "=" << (ok ? "pass" : "fail") << "\n";
      j["claims"][name] = ok;
    }
    out << "overall=" << (all_pass() ? "pass" : "fail") << "\n";
    j["overall"] = all_pass();
    return Report{out.str(), std::move(j)};
  }
};

/// Runs every built-in example claim. mutate_for_test deliberately swaps one
/// fixture to exercise the failure path.
inline ExampleClaims run_example_claims(bool mutate_for_test = false) {
  ExampleClaims R;
  auto claim = [&](const std::string& name, bool ok) {
    R.claims.emplace_back(name, ok);
  };

  Semigroup ex33 = fixture(mutate_for_test ? Fixture::ex36_etaclass
                                           : Fixture::ex33_S);
  claim("ex33_order", ex33.order() == 10);
  claim("ex33_hc", is_h_commutative(ex33).holds);

  bool square_not_hc = false;
  bool pair_insolvable = false;
  if (ex33.order() == 10) {
    Semigroup square = direct_product(ex33, ex33);
    square_not_hc = !is_h_commutative(square).holds;
    // The pair ((a,t1),(a,t2)) under the frozen layout: a = 0 and, within
    // the symmetric-group block starting at 3, t1 and t2 sit at offsets 1
    // and 5 of the one-line lexicographic order.
    element p = 0 * 10 + 4;
    element q = 0 * 10 + 8;
    SOne s1(square);
    auto candidates = s1.witness_candidates();
    pair_insolvable = candidates.size() == 101;
    for (element x : candidates) {
      if (s1.mul(s1.mul(q, x), p) == square.at(p, q)) {
        pair_insolvable = false;
        break;
      }
    }
  }
  claim("ex33_square_not_hc", square_not_hc);
  claim("ex33_pair_eq2_insolvable", pair_insolvable);

  Semigroup u = fixture(Fixture::ex35_U);
  claim("ex35_u_order", u.order() == 11);
  Semigroup t = fixture(Fixture::ex35_T);
  claim("ex35_t_order", t.order() == 121);
  claim("ex35_t_hc", is_h_commutative(t).holds);

  {
    // The copy of the squared ex33 semigroup inside T: both coordinates
    // range over ex35_U minus its adjoined identity (index 3).
    std::vector<element> members;
    for (element i = 0; i < 11; ++i) {
      for (element j = 0; j < 11; ++j) {
        if (i != 3 && j != 3) {
          members.push_back(i * 11 + j);
        }
      }
    }
    SubsetHandle copy(t, members);
    claim("ex35_embedded_square_not_hc",
          copy.size() == 100 && !is_h_commutative(copy.materialize()).holds);
  }

  {
    auto classes = eta_classes(t);
    // Class of (a, t1): a is ex35_U index 0 and t1 is index 5.
    element probe = 0 * 11 + 5;
    const EtaClass* cls = nullptr;
    for (auto& c : classes) {
      if (std::binary_search(c.members.begin(), c.members.end(), probe)) {
        cls = &c;
      }
    }
    std::vector<element> expected;
    for (element i = 0; i <= 2; ++i) {
      for (element j = 4; j <= 9; ++j) {
        expected.push_back(i * 11 + j);
      }
    }
    std::sort(expected.begin(), expected.end());
    claim("ex36_class_matches", cls != nullptr && cls->members == expected);
    claim("ex36_class_not_hc",
          cls != nullptr && !is_h_commutative(cls->semigroup).holds);
    claim("ex36_class_archimedean",
          cls != nullptr && is_archimedean(cls->semigroup));
  }
  return R;
}

}  // namespace semidom
