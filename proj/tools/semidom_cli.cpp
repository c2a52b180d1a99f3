//
// semidom command-line front end.
//
// Exit codes: 0 ok, 1 claim failure, 2 semantic input error, 3 I/O or parse
// error, 4 certify target not dominated, 5 dense extension found for the
// input, 6 cost guard tripped.
//

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semidom/semidom.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kClaimFailure = 1;
constexpr int kSemanticError = 2;
constexpr int kIoError = 3;
constexpr int kNotDominated = 4;
constexpr int kSaturationAlarm = 5;
constexpr int kCostGuard = 6;

semidom::Semigroup load_input(const std::string& path,
                              const std::string& fixture_name) {
  if (!fixture_name.empty()) {
    return semidom::fixture(semidom::fixture_from_name(fixture_name));
  }
  std::ifstream in(path);
  if (!in) {
    throw semidom::ParseError("cannot open \"" + path + "\"");
  }
  return semidom::parse_smg(in);
}

std::vector<semidom::element> parse_index_list(const std::string& csv) {
  std::vector<semidom::element> out;
  std::string tok;
  std::istringstream ss(csv);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) {
      continue;
    }
    out.push_back(static_cast<semidom::element>(std::stoul(tok)));
  }
  return out;
}

void emit(const semidom::Report& r, bool json) {
  if (json) {
    std::cout << r.json.dump(2) << "\n";
  } else {
    std::cout << r.text;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"finite semigroup analysis: Green's relations, H-commutativity, "
               "semilattice decompositions, dominions and saturation"};
  app.require_subcommand(1);

  std::string path, fixture_name, subset_csv, filter_name = "none";
  bool json = false, count_only = false, mutate = false;
  std::size_t order = 1, extra = 1;
  std::optional<std::size_t> certify;

  auto add_input = [&](CLI::App* cmd) {
    auto* p = cmd->add_option("path", path, "smg v1 input file");
    auto* f = cmd->add_option("--fixture", fixture_name,
                              "built-in input: ex33_S, ex35_U, ex35_T, "
                              "ex36_etaclass");
    p->excludes(f);
  };

  auto* validate = app.add_subcommand("validate", "check an smg file");
  validate->add_option("path", path, "smg v1 input file")->required();

  auto* analyze = app.add_subcommand("analyze", "structural report");
  add_input(analyze);
  analyze->add_flag("--json", json, "JSON output");

  auto* dom = app.add_subcommand("dominion", "dominion of a closed subset");
  add_input(dom);
  dom->add_option("--subset", subset_csv, "comma-separated member indices")
      ->required();
  dom->add_option("--certify", certify,
                  "emit a zigzag certificate for this element");
  dom->add_flag("--json", json, "JSON output");

  auto* enumerate = app.add_subcommand("enumerate", "stream small semigroups");
  enumerate->add_option("--order", order, "table order")->required();
  enumerate->add_option("--filter", filter_name,
                        "none, hc, monoid, commutative, regular");
  enumerate->add_flag("--count-only", count_only, "print the count only");
  enumerate->add_flag("--json", json, "JSON output");

  auto* saturate = app.add_subcommand("saturate", "scan for dense extensions");
  add_input(saturate);
  saturate->add_option("--extra", extra, "extension size (1 or 2)");
  saturate->add_flag("--json", json, "JSON output");

  auto* examples = app.add_subcommand("examples",
                                      "run the built-in example checks");
  examples->add_flag("--json", json, "JSON output");
  examples->add_flag("--mutate-for-test", mutate,
                     "deliberately break a fixture (exercises exit 1)")
      ->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot open \"" << path << "\"\n";
      return kIoError;
    }
    try {
      semidom::Semigroup s = semidom::parse_smg(in);
      std::cout << "ok order=" << s.order() << "\n";
      return kOk;
    } catch (const semidom::AssociativityViolation& e) {
      std::cerr << e.what() << "\n";
      return kSemanticError;
    } catch (const semidom::ParseError& e) {
      std::cerr << e.what() << "\n";
      return kIoError;
    }
  }

  if ((analyze->parsed() || dom->parsed() || saturate->parsed()) &&
      path.empty() && fixture_name.empty()) {
    std::cerr << "need an input file or --fixture\n";
    return kIoError;
  }

  if (analyze->parsed()) {
    emit(semidom::analysis_report(load_input(path, fixture_name)), json);
    return kOk;
  }

  if (dom->parsed()) {
    semidom::Semigroup s = load_input(path, fixture_name);
    semidom::SubsetHandle u(s, parse_index_list(subset_csv));
    semidom::Report r = semidom::dominion_report(s, u);
    emit(r, json);
    if (certify) {
      semidom::element d = static_cast<semidom::element>(*certify);
      s.check_index(d);
      semidom::SubsetHandle domset = semidom::dominion(s, u);
      if (!domset.contains(d)) {
        std::cout << "certify=" << d << " not_dominated\n";
        return kNotDominated;
      }
      if (u.contains(d)) {
        std::cout << "certify=" << d << " in_subset\n";
        return kOk;
      }
      auto w = semidom::zigzag_search(s, u, d, s.order() * s.order());
      if (!w) {
        std::cerr << "no witness within the length bound\n";
        return kClaimFailure;
      }
      std::cout << semidom::write_certificate(*w, u);
    }
    return kOk;
  }

  if (enumerate->parsed()) {
    semidom::EnumerationSpec spec;
    spec.order = order;
    spec.filter = semidom::filter_from_name(filter_name);
    if (count_only) {
      emit(semidom::enumeration_report(spec), json);
    } else {
      std::uint64_t count = 0;
      semidom::all_semigroups(spec, [&](const semidom::Semigroup& s) {
        std::cout << "# " << count++ << "\n" << semidom::write_smg(s) << "\n";
        return true;
      });
      std::cout << "# count=" << count << "\n";
    }
    return kOk;
  }

  if (saturate->parsed()) {
    semidom::Semigroup s = load_input(path, fixture_name);
    semidom::SaturationReport r = semidom::saturation_report(s, extra);
    emit(r.report, json);
    return r.dense_count == 0 ? kOk : kSaturationAlarm;
  }

  if (examples->parsed()) {
    semidom::ExampleClaims claims = semidom::run_example_claims(mutate);
    emit(claims.render(), json);
    return claims.all_pass() ? kOk : kClaimFailure;
  }

  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const semidom::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kIoError;
  } catch (const semidom::CostGuard& e) {
    std::cerr << e.what() << "\n";
    return kCostGuard;
  } catch (const semidom::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kCostGuard;
  } catch (const semidom::Error& e) {
    std::cerr << e.what() << "\n";
    return kSemanticError;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kSemanticError;
  }
}
