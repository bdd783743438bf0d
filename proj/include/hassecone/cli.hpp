#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "oracle.hpp"
#include "reduction.hpp"

// Command-line front end.  Every subcommand prints to the given stream and
// exit codes are stable: 0 success, 1 usage or parse error, 2 oracle guard
// exceeded, 3 selftest failure.

namespace hassecone::cli {

// Built-in oracle-equivalence and golden checks; prints one line per check.
inline bool run_selftest(std::ostream& out) {
  std::size_t failures = 0;
  const auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "ok - " : "FAIL - ") << name << "\n";
    if (!ok) ++failures;
  };

  const SplittingType inert2(2, {2});
  const SplittingType split5(5, {1, 1});
  const SplittingType mixed2(2, {1, 2});

  {
    const ReductionOutcome r = reduce(WeightVector(inert2, {0, 3}));
    check("reduce (0,3) reaches (1,1) with n=(1,0) in one step",
          r.is_minimal() && r.minimal().k_min == WeightVector(inert2, {1, 1}) &&
              r.minimal().exponents == WeightVector(inert2, {1, 0}) &&
              r.trace.size() == 1);
  }
  {
    const ReductionOutcome r = reduce(WeightVector(inert2, {1, 1}));
    check("reduce (1,1) is already minimal",
          r.is_minimal() && r.trace.empty());
  }
  {
    const ReductionOutcome r = reduce(WeightVector(inert2, {0, 1}));
    check("reduce (0,1) vanishes with a negative Hasse coordinate",
          !r.is_minimal() &&
              r.vanishing().witness.kind ==
                  VanishingWitness::Kind::NegativeHasseCoordinate &&
              r.vanishing().witness.value < 0);
  }
  {
    const ReductionOutcome r = reduce(WeightVector(split5, {-1, 7}));
    check("reduce (-1,7) vanishes by the degree-one criterion",
          !r.is_minimal() && r.trace.empty() &&
              r.vanishing().witness.kind ==
                  VanishingWitness::Kind::DegreeOneNegative);
  }

  for (const auto& [st, lo, hi] :
       {std::tuple{inert2, -3, 3}, std::tuple{mixed2, -2, 2}}) {
    const std::size_t d = st.total_degree();
    const std::vector<Int> blo(d, Int(lo));
    const std::vector<Int> bhi(d, Int(hi));
    std::vector<Int> entries = blo;
    bool ok = true;
    while (true) {
      const WeightVector k(st, entries);
      const ReductionOutcome r = reduce(k);
      const BoxSearchResult b = box_search(k);
      if (r.is_minimal() != b.found()) ok = false;
      if (r.is_minimal() && b.found()) {
        if (!b.unique() ||
            !(r.minimal().exponents == b.unique_minimal()) ||
            !(r.minimal().k_min == k - combine(b.unique_minimal()))) {
          ok = false;
        }
      }
      if (!ok || !detail::advance(entries, blo, bhi)) break;
    }
    check("reduce agrees with box_search on " + st.to_string() + " in [" +
              std::to_string(lo) + "," + std::to_string(hi) + "]^" +
              std::to_string(d),
          ok);
  }

  {
    bool ok = true;
    for (const SplittingType& st : {inert2, split5, mixed2}) {
      for (const WeightVector& ray : min_cone_rays(st)) {
        if (!in_min_cone(ray)) ok = false;
      }
    }
    check("all minimal-cone rays pass in_min_cone", ok);
  }
  {
    const HilbertBasisResult h = hilbert_basis(inert2, 6);
    const std::vector<WeightVector> expected{WeightVector(inert2, {1, 1}),
                                             WeightVector(inert2, {1, 2}),
                                             WeightVector(inert2, {2, 1})};
    check("hilbert basis of p=2;f=2 at bound 6 is {(1,1),(1,2),(2,1)}",
          h.basis == expected && h.certified_complete);
  }

  out << (failures == 0 ? "selftest: all checks passed\n"
                        : "selftest: " + std::to_string(failures) +
                              " check(s) FAILED\n");
  return failures == 0;
}

namespace detail_cli {

inline StepStrategy parse_strategy(const std::string& s) {
  if (s == "first") return StepStrategy::FirstViolated;
  if (s == "last") return StepStrategy::LastViolated;
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

inline std::string chain_to_text(const ChainReport& r) {
  std::ostringstream os;
  os << "splits completely: " << (r.splits_completely ? "yes" : "no") << "\n";
  if (r.witnesses) {
    os << "in standard cone but not minimal cone: "
       << r.witnesses->std_not_min << "\n";
    os << "in Hasse cone but not standard cone: "
       << r.witnesses->hasse_not_std << "\n";
  }
  os << r.note << "\n";
  return os.str();
}

inline std::string cone_check_to_text(const WeightVector& k) {
  const HasseCoordinates coords = hasse_coordinates(k);
  std::ostringstream os;
  os << "in_min_cone: " << (in_min_cone(k) ? "true" : "false") << "\n";
  os << "in_std_cone: " << (in_std_cone(k) ? "true" : "false") << "\n";
  os << "in_hasse_cone: " << (coords.all_nonnegative() ? "true" : "false")
     << "\n";
  os << "y: [";
  for (std::size_t i = 0; i < coords.y.size(); ++i) {
    if (i > 0) os << ", ";
    os << jsonio::rat_to_string(coords.y[i]);
  }
  os << "]\n";
  return os.str();
}

}  // namespace detail_cli

// Runs the CLI on a full argv (program name included).  All output goes to
// the supplied streams, which keeps the tool embeddable in tests.
inline int run(const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact weight-cone calculus for mod-p Hilbert modular forms"};
  app.require_subcommand(1);

  std::string st_text;
  std::string k_text;
  std::string format = "json";
  std::string strategy = "first";
  std::uint64_t ceiling = kDefaultOracleCeiling;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t bound = 0;

  const auto add_common = [&](CLI::App* cmd, bool needs_st = true) {
    if (needs_st) {
      cmd->add_option("--st", st_text,
                      "splitting type, e.g. \"p=2;f=2,1\"")
          ->required();
    }
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* cone = app.add_subcommand(
      "cone-check", "membership of a weight in the three cones");
  add_common(cone);
  cone->add_option("--k", k_text, "weight as a JSON array")->required();

  CLI::App* red = app.add_subcommand(
      "reduce", "reduce a weight to the minimal cone or certify vanishing");
  add_common(red);
  red->add_option("--k", k_text, "weight as a JSON array")->required();
  red->add_option("--strategy", strategy, "step choice: first|last")
      ->check(CLI::IsMember({"first", "last"}));

  CLI::App* rays = app.add_subcommand(
      "rays", "extreme rays of the minimal cone");
  add_common(rays);

  CLI::App* chain = app.add_subcommand(
      "chain", "cone containment chain report with witnesses");
  add_common(chain);

  CLI::App* census = app.add_subcommand(
      "census", "classify every integer weight in a box");
  add_common(census);
  census->add_option("--lo", lo, "lower bound, inclusive")->required();
  census->add_option("--hi", hi, "upper bound, inclusive")->required();
  census->add_option("--ceiling", ceiling, "oracle search-space ceiling")
      ->check(CLI::PositiveNumber);

  CLI::App* conf = app.add_subcommand(
      "confluence", "compare all reduction strategies over a box");
  add_common(conf);
  conf->add_option("--lo", lo, "lower bound, inclusive")->required();
  conf->add_option("--hi", hi, "upper bound, inclusive")->required();
  conf->add_option("--ceiling", ceiling, "oracle search-space ceiling")
      ->check(CLI::PositiveNumber);

  CLI::App* hilb = app.add_subcommand(
      "hilbert", "brute-force Hilbert basis of the minimal-cone monoid");
  add_common(hilb);
  hilb->add_option("--bound", bound, "entry bound, inclusive")->required();
  hilb->add_option("--ceiling", ceiling, "oracle search-space ceiling")
      ->check(CLI::PositiveNumber);

  CLI::App* self = app.add_subcommand(
      "selftest", "run the built-in oracle-equivalence suite");
  add_common(self, /*needs_st=*/false);

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const std::string& a : argv) raw.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(raw.size()),
              const_cast<char**>(raw.data()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (self->parsed()) {
      return run_selftest(out) ? 0 : 3;
    }

    const SplittingType st = SplittingType::parse(st_text);
    if (st.total_degree() == 1) {
      err << "warning: d = 1 is outside the intended range of the weight "
             "calculus (classical modular forms); results are the "
             "degenerate one-orbit case\n";
    }
    if (format == "csv" && !census->parsed()) {
      err << "error: --format csv is only available for census\n";
      return 1;
    }

    const auto parse_weight = [&](const std::string& text) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad weight JSON: ") +
                                    e.what());
      }
      return jsonio::weight_from_json(st, j);
    };

    if (cone->parsed()) {
      const WeightVector k = parse_weight(k_text);
      if (format == "text") {
        out << detail_cli::cone_check_to_text(k);
      } else {
        out << jsonio::cone_check_to_json(k).dump() << "\n";
      }
    } else if (red->parsed()) {
      const WeightVector k = parse_weight(k_text);
      const ReductionOutcome outcome =
          reduce(k, detail_cli::parse_strategy(strategy));
      if (format == "text") {
        out << explain(outcome);
      } else {
        out << jsonio::outcome_to_json(outcome).dump() << "\n";
      }
    } else if (rays->parsed()) {
      const std::vector<WeightVector> r = min_cone_rays(st);
      if (format == "text") {
        for (const WeightVector& ray : r) out << ray << "\n";
      } else {
        out << jsonio::rays_to_json(r).dump() << "\n";
      }
    } else if (chain->parsed()) {
      const ChainReport report = chain_report(st);
      if (format == "text") {
        out << detail_cli::chain_to_text(report);
      } else {
        out << jsonio::chain_to_json(report).dump() << "\n";
      }
    } else if (census->parsed()) {
      const BoxSpec box(st, Int(lo), Int(hi));
      const Census result =
          classify_box(box, ceiling, /*keep_rows=*/format == "csv");
      if (format == "csv") {
        out << jsonio::census_to_csv(result);
      } else if (format == "text") {
        out << "minimal_already: " << result.minimal_already << "\n"
            << "reduces: " << result.reduces << "\n"
            << "vanishing_by_hasse: " << result.vanishing_by_hasse << "\n"
            << "vanishing_by_chain: " << result.vanishing_by_chain << "\n"
            << "total: " << result.total() << "\n";
      } else {
        out << jsonio::census_to_json(result).dump() << "\n";
      }
    } else if (conf->parsed()) {
      const BoxSpec box(st, Int(lo), Int(hi));
      const ConfluenceReport report = confluence_sweep(box, ceiling);
      if (format == "text") {
        out << "weights checked: " << report.weights_checked << "\n"
            << "counterexamples: " << report.counterexamples.size() << "\n";
      } else {
        out << jsonio::confluence_to_json(report).dump() << "\n";
      }
    } else if (hilb->parsed()) {
      const HilbertBasisResult result = hilbert_basis(st, Int(bound), ceiling);
      if (format == "text") {
        for (const WeightVector& b : result.basis) out << b << "\n";
        out << (result.certified_complete ? "complete for the cone"
                                          : "within box only")
            << "\n";
      } else {
        out << jsonio::hilbert_to_json(result).dump() << "\n";
      }
    }
    return 0;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace hassecone::cli
