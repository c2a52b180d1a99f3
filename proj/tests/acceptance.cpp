//
// Acceptance suite: runs every top-level criterion and prints one pass/fail
// line each. Exit code is the number of failed criteria.
//

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "semidom/semidom.hpp"

using namespace semidom;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) {
      detail += "; ";
    }
    detail += why;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) {
      fail(why);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// --- criterion 1: the ten-element fixture and its square ---
Outcome criterion1() {
  Outcome o;
  Semigroup s = fixture(Fixture::ex33_S);
  o.require(s.order() == 10, "fixture order != 10");
  o.require(is_h_commutative(s).holds, "fixture not H-commutative");

  Semigroup square = direct_product(s, s);
  HcVerdict v = is_h_commutative(square);
  o.require(!v.holds, "square unexpectedly H-commutative");

  // Stated expectation: the first counterexample is ((a,t1),(a,t2)),
  // i.e. pair indices (4, 8) under the frozen layout.
  element p_at1 = 0 * 10 + 4, p_at2 = 0 * 10 + 8;
  if (v.counterexample != std::make_pair(p_at1, p_at2)) {
    std::ostringstream why;
    why << "first counterexample is (" << v.counterexample->first << ","
        << v.counterexample->second << ") = ((a,t1),(a,(1 2))), not ((a,t1),(a,t2)) = ("
        << p_at1 << "," << p_at2
        << "); the stated pair is a counterexample but not the first one "
           "under the frozen one-line-lexicographic layout";
    o.fail(why.str());
  }

  // Insolvability of the displayed equation for ((a,t1),(a,t2)), scanned
  // over all 101 candidates of the square's S^1.
  SOne s1(square);
  auto candidates = s1.witness_candidates();
  o.require(candidates.size() == 101, "candidate count != 101");
  for (element x : candidates) {
    if (s1.mul(s1.mul(p_at2, x), p_at1) == square.at(p_at1, p_at2)) {
      o.fail("equation (a,t1)(a,t2) = (a,t2)x(a,t1) unexpectedly solvable");
      break;
    }
  }
  return o;
}

// --- criterion 2: the eleven-element monoid-extended fixture and its square ---
Outcome criterion2() {
  Outcome o;
  Semigroup u = fixture(Fixture::ex35_U);
  o.require(u.order() == 11, "U order != 11");
  Semigroup t = fixture(Fixture::ex35_T);
  o.require(t.order() == 121, "T order != 121");

  SOne t1(t);
  o.require(t1.witness_candidates().size() == 122,
            "witness candidate count != 122");
  o.require(is_h_commutative(t).holds, "T not H-commutative");

  std::vector<element> members;
  for (element i = 0; i < 11; ++i) {
    for (element j = 0; j < 11; ++j) {
      if (i != 3 && j != 3) {
        members.push_back(i * 11 + j);
      }
    }
  }
  SubsetHandle copy(t, members);
  o.require(copy.size() == 100, "embedded square copy size != 100");
  o.require(!is_h_commutative(copy.materialize()).holds,
            "embedded square copy unexpectedly H-commutative");
  return o;
}

// --- criterion 3: the eta-class of (a, t1) inside the 121-element fixture ---
Outcome criterion3() {
  Outcome o;
  Semigroup t = fixture(Fixture::ex35_T);
  auto classes = eta_classes(t);
  element probe = 0 * 11 + 5;  // (a, t1)
  const EtaClass* cls = nullptr;
  for (auto& c : classes) {
    if (std::binary_search(c.members.begin(), c.members.end(), probe)) {
      cls = &c;
    }
  }
  if (!cls) {
    o.fail("no eta class contains (a,t1)");
    return o;
  }
  std::vector<element> expected;
  for (element i = 0; i <= 2; ++i) {
    for (element j = 4; j <= 9; ++j) {
      expected.push_back(i * 11 + j);
    }
  }
  std::sort(expected.begin(), expected.end());
  o.require(cls->members == expected, "class is not the 18-element block");
  o.require(!is_h_commutative(cls->semigroup).holds,
            "class unexpectedly H-commutative");
  o.require(is_archimedean(cls->semigroup), "class not archimedean");

  // mutual power divisibility, spelled out within the class
  const Semigroup& c = cls->semigroup;
  for (element a = 0; a < c.order(); ++a) {
    auto powers = [&](element b) {
      std::vector<element> out;
      std::vector<char> seen(c.order(), 0);
      element p = b;
      while (!seen[p]) {
        seen[p] = 1;
        out.push_back(p);
        p = c.at(p, b);
      }
      return out;
    };
    for (element b = 0; b < c.order(); ++b) {
      bool hit = false;
      for (element p : powers(b)) {
        hit = hit || divides(c, a, p);
      }
      if (!hit) {
        o.fail("an element fails to divide any power of another");
      }
    }
  }
  return o;
}

// --- criterion 4: enumeration baselines ---
Outcome criterion4() {
  Outcome o;
  const std::uint64_t expected[] = {1, 8, 113, 3492};
  for (std::size_t n = 1; n <= 4; ++n) {
    EnumerationSpec spec;
    spec.order = n;
    std::uint64_t got = count_semigroups(spec);
    if (got != expected[n - 1]) {
      std::ostringstream why;
      why << "count(" << n << ") = " << got << ", expected "
          << expected[n - 1];
      o.fail(why.str());
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    std::ostringstream pruned, brute;
    EnumerationSpec spec;
    spec.order = n;
    all_semigroups(spec, [&](const Semigroup& s) {
      pruned << write_smg(s);
      return true;
    });
    all_semigroups_bruteforce(n, [&](const Semigroup& s) {
      brute << write_smg(s);
      return true;
    });
    o.require(pruned.str() == brute.str(),
              "pruned and brute-force streams differ at order " +
                  std::to_string(n));
  }
  return o;
}

// --- criterion 5: structural sweep over every semigroup of order <= 4 ---
Outcome criterion5() {
  Outcome o;
  std::uint64_t inputs = 0, hc_inputs = 0;
  for (std::size_t n = 1; n <= 4 && o.pass; ++n) {
    EnumerationSpec spec;
    spec.order = n;
    all_semigroups(spec, [&](const Semigroup& s) {
      ++inputs;
      HcVerdict hc = is_h_commutative(s);
      GreenProfile g = green(s);

      bool tully_route =
          is_congruence(s, g.H) && is_h_commutative_tully(s).holds;
      o.require(hc.holds == tully_route, "witness and H-congruence routes disagree");

      HQuotientReport hq = h_congruence_commutative_quotient(s);
      o.require(hc.holds == (hq.h_is_congruence &&
                             hq.quotient_commutative == true),
                "congruence/commutative-quotient equivalence fails");

      o.require(clifford_profile(s).all_equal(),
                "semilattice-of-groups conditions disagree");

      if (hc.holds) {
        ++hc_inputs;
        o.require(green_coincide(s), "Green relations do not coincide");
        o.require(idempotents_central(s), "idempotents not central");

        for (element a = 0; a < n; ++a) {
          std::vector<char> as(n, 0), sa(n, 0);
          for (element x = 0; x < n; ++x) {
            as[s.at(a, x)] = 1;
            sa[s.at(x, a)] = 1;
          }
          o.require(as == sa, "aS != Sa");
        }

        Congruence eta = least_semilattice_congruence(s);
        o.require(rho_partition(s) == eta.partition,
                  "mutual-divisibility classes differ from eta");
        for (auto& cls : eta_classes(s)) {
          o.require(is_archimedean(cls.semigroup), "eta class not archimedean");
          o.require(idempotents(cls.semigroup).size() <= 1,
                    "eta class holds two idempotents");
        }

        for (element a1 = 0; a1 < n; ++a1) {
          for (element b1 = 0; b1 < n; ++b1) {
            if (!divides(s, a1, b1)) {
              continue;
            }
            for (element a2 = 0; a2 < n; ++a2) {
              for (element b2 = 0; b2 < n; ++b2) {
                if (divides(s, a2, b2)) {
                  o.require(divides(s, s.at(a1, a2), s.at(b1, b2)),
                            "divisibility not compatible with products");
                }
              }
            }
          }
        }
        for (element a = 0; a < n; ++a) {
          for (element b = 0; b < n; ++b) {
            for (std::uint64_t k = 1; k <= n; ++k) {
              if (g.H.same_block(a, b)) {
                o.require(g.H.same_block(power(s, a, k), power(s, b, k)),
                          "H does not respect powers");
              }
              o.require(g.H.same_block(power(s, s.at(a, b), k),
                                       s.at(power(s, a, k), power(s, b, k))),
                        "(ab)^n not H-related to a^n b^n");
            }
          }
        }
      }
      return o.pass;
    });
  }
  if (o.pass) {
    std::ostringstream d;
    d << inputs << " semigroups, " << hc_inputs << " H-commutative";
    o.detail = d.str();
  }
  return o;
}

// --- criterion 6: dominion oracle equivalence ---
Outcome criterion6() {
  Outcome o;
  std::uint64_t verdicts = 0;
  auto check = [&](const Semigroup& s) {
    std::size_t bound = s.order() * s.order();
    for (auto& u : closed_subsets(s)) {
      TensorClosure tc(s, u);
      for (element d = 0; d < s.order() && o.pass; ++d) {
        ++verdicts;
        auto w = zigzag_search(s, u, d, bound);
        if (w && !validate_zigzag(s, u, *w)) {
          o.fail("search returned an invalid witness");
        }
        bool oracle = u.contains(d) || w.has_value();
        if (tc.member(d) != oracle) {
          std::ostringstream why;
          why << "divergence at order " << s.order() << ", d=" << d;
          o.fail(why.str());
        }
      }
      if (!o.pass) {
        break;
      }
    }
    return o.pass;
  };
  for (std::size_t n = 1; n <= 4 && o.pass; ++n) {
    EnumerationSpec spec;
    spec.order = n;
    all_semigroups(spec, check);
  }
  // sampled inputs of order 5 and 6
  std::vector<Semigroup> sampled{
      Semigroup(5, {0, 0, 0, 0, 0,
                    0, 0, 0, 1, 2,
                    0, 1, 2, 0, 0,
                    0, 0, 0, 3, 4,
                    0, 3, 4, 0, 0}),
      monogenic(1, 5), monogenic(3, 3), monogenic(5, 1),
      zero_direct_union(monogenic(1, 2), monogenic(1, 2)),
      symmetric_group(3), monogenic(1, 6), monogenic(4, 3),
      zero_direct_union(monogenic(2, 1), monogenic(3, 1)),
      direct_product(monogenic(1, 2), monogenic(1, 3))};
  for (auto& s : sampled) {
    if (!o.pass) {
      break;
    }
    check(s);
  }
  if (o.pass) {
    o.detail = std::to_string(verdicts) + " membership verdicts";
  }
  return o;
}

// --- criterion 7: dominions of H-commutative subsets are H-commutative ---
Outcome criterion7() {
  Outcome o;
  std::uint64_t checked = 0;
  for (std::size_t n = 1; n <= 4 && o.pass; ++n) {
    EnumerationSpec spec;
    spec.order = n;
    all_semigroups(spec, [&](const Semigroup& s) {
      for (auto& u : closed_subsets(s)) {
        if (!is_h_commutative(u.materialize()).holds) {
          continue;
        }
        ++checked;
        if (!dominion_hc_check(s, u)) {
          o.fail("a dominion of an H-commutative subset is not H-commutative");
          return false;
        }
      }
      return true;
    });
  }
  if (o.pass) {
    o.detail = std::to_string(checked) + " (U,S) pairs";
  }
  return o;
}

// --- criterion 8: no dense extensions of H-commutative inputs ---
Outcome criterion8() {
  Outcome o;
  std::uint64_t scans = 0;
  for (std::size_t n = 1; n <= 3 && o.pass; ++n) {
    EnumerationSpec spec;
    spec.order = n;
    spec.filter = SemigroupFilter::hc;
    all_semigroups(spec, [&](const Semigroup& s) {
      ++scans;
      if (!saturation_scan(s, 1).empty()) {
        o.fail("dense extension found at order " + std::to_string(n));
        return false;
      }
      return true;
    });
  }
  for (auto& s : {monogenic(1, 2), monogenic(1, 3), monogenic(2, 1),
                  monogenic(3, 1)}) {
    ++scans;
    o.require(saturation_scan(s, 1).empty(), "dense extension for a named input");
  }
  ++scans;
  o.require(saturation_scan(monogenic(1, 2), 2).empty(),
            "dense two-element extension of the two-element group");
  if (o.pass) {
    o.detail = std::to_string(scans) + " scans, all empty";
  }
  return o;
}

// --- criterion 9: power witnesses on every H-commutative input ---
Outcome criterion9() {
  Outcome o;
  std::uint64_t witnesses = 0;
  for (std::size_t n = 1; n <= 4 && o.pass; ++n) {
    EnumerationSpec spec;
    spec.order = n;
    spec.filter = SemigroupFilter::hc;
    all_semigroups(spec, [&](const Semigroup& s) {
      GreenProfile g = green(s);
      for (element a = 0; a < s.order(); ++a) {
        PowerWitness w = power_idempotent_witness(s, a);
        ++witnesses;
        element ar = power(s, a, w.exponent);
        element arc = s.at(ar, w.cofactor);
        if (s.at(arc, arc) != arc || !g.H.same_block(ar, arc)) {
          o.fail("witness invariants fail");
          return false;
        }
      }
      return true;
    });
  }
  if (o.pass) {
    o.detail = std::to_string(witnesses) + " witnesses re-verified";
  }
  return o;
}

// --- criterion 10: byte-identical artifacts across two runs ---
std::string artifact_bundle() {
  std::ostringstream out;
  out << analysis_report(fixture(Fixture::ex33_S)).text;
  out << analysis_report(fixture(Fixture::ex36_etaclass)).text;
  out << run_example_claims().render().text;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto f : {SemigroupFilter::none, SemigroupFilter::hc}) {
      EnumerationSpec spec;
      spec.order = n;
      spec.filter = f;
      out << enumeration_report(spec).text;
    }
  }
  out << saturation_report(monogenic(2, 1), 1).report.text;
  {
    Semigroup s(5, {0, 0, 0, 0, 0,
                    0, 0, 0, 1, 2,
                    0, 1, 2, 0, 0,
                    0, 0, 0, 3, 4,
                    0, 3, 4, 0, 0});
    SubsetHandle u(s, {0, 1, 2, 3});
    auto w = zigzag_search(s, u, 4, 25);
    if (w) {
      out << write_certificate(*w, u);
    }
    out << dominion_report(s, u).text;
  }
  return out.str();
}

Outcome criterion10() {
  Outcome o;
  o.require(artifact_bundle() == artifact_bundle(),
            "two runs produced different bytes");
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    Outcome (*fn)();
    double limit_s;  // 0 = no stated bound
  };
  const Entry entries[] = {
      {1, "ex33 reproduction", criterion1, 1.0},
      {2, "ex35 reproduction", criterion2, 10.0},
      {3, "ex36 eta-class reproduction", criterion3, 0.0},
      {4, "enumeration baselines", criterion4, 60.0},
      {5, "structural sweep, order <= 4", criterion5, 300.0},
      {6, "dominion oracle equivalence", criterion6, 600.0},
      {7, "dominion H-commutativity sweep", criterion7, 0.0},
      {8, "saturation desk verification", criterion8, 600.0},
      {9, "power witness sweep", criterion9, 0.0},
      {10, "determinism", criterion10, 0.0},
  };

  int failures = 0;
  for (const auto& e : entries) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    double dt = seconds_since(t0);
    if (e.limit_s > 0 && dt > e.limit_s) {
      o.fail("exceeded time bound of " + std::to_string(e.limit_s) + " s");
    }
    std::printf("criterion %2d [%s]: %s (%.2fs)%s%s\n", e.id, e.name,
                o.pass ? "PASS" : "FAIL", dt, o.detail.empty() ? "" : " - ",
                o.detail.c_str());
    if (!o.pass) {
      ++failures;
    }
  }
  std::printf("acceptance: %d/10 criteria passed\n",
              10 - failures);
  return failures;
}
