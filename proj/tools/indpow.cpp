// Command-line front end: count tables, sequences, verification and export.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indpow/commands.hpp"
#include "indpow/graph.hpp"
#include "indpow/verify.hpp"

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independent subsets of powers of paths and cycles"};
  // "--h" is the power parameter, so help is long-form only.
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  std::string family;
  std::string kind;
  int h = -1;
  int n_max = 0;
  int count = 0;
  bool per_k = false;

  auto* table = app.add_subcommand("table", "TSV of counts for n = 0..n-max");
  table->add_option("--family", family, "path or cycle")
      ->required()
      ->check(CLI::IsMember(indpow::kTableFamilies));
  table->add_option("--h", h, "power")->required();
  table->add_option("--n-max", n_max, "last row")->required();
  table->add_flag("--per-k", per_k, "one column per subset size");

  auto* seq = app.add_subcommand("seq", "one sequence term per line");
  seq->add_option("--kind", kind, "hfib, p, q, hedges or medges")
      ->required()
      ->check(CLI::IsMember(indpow::kSeqKinds));
  seq->add_option("--h", h, "power")->required();
  seq->add_option("--count", count, "number of terms")->required();

  indpow::VerifyOptions verify_options;
  bool json = false;
  std::string fault = "none";
  auto* verify = app.add_subcommand(
      "verify", "check every formula against the enumeration oracle");
  verify->add_option("--h-max", verify_options.h_max, "largest power")
      ->capture_default_str();
  verify->add_option("--n-max-formula", verify_options.n_max_formula,
                     "range for formula-vs-formula checks")
      ->capture_default_str();
  verify->add_option("--n-max-oracle", verify_options.n_max_oracle,
                     "range for enumeration-backed checks")
      ->capture_default_str();
  verify->add_flag("--json", json, "print the report as JSON");
  verify->add_option("--inject-fault", fault)
      ->check(CLI::IsMember({"none", "binom-off-by-one"}))
      ->group("");

  indpow::ExportRequest request;
  std::string patterns_csv;
  auto* exp = app.add_subcommand("export", "graph or Hasse diagram as DOT/JSON");
  exp->add_option("--family", request.family)
      ->required()
      ->check(CLI::IsMember(indpow::kExportFamilies));
  exp->add_option("--n", request.n, "number of vertices or string length")->required();
  exp->add_option("--h", request.h, "power (path, cycle; optional for gen-cube)");
  exp->add_option("--patterns", patterns_csv, "comma-separated, gen-cube only");
  exp->add_flag("--circular", request.circular, "circular pattern containment");
  exp->add_option("--what", request.what)
      ->required()
      ->check(CLI::IsMember({"graph", "hasse"}));
  exp->add_option("--format", request.format)
      ->required()
      ->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) {
      std::cout << indpow::render_table(family, h, n_max, per_k);
    } else if (*seq) {
      std::cout << indpow::render_seq(kind, h, count);
    } else if (*verify) {
      if (fault == "binom-off-by-one") {
        verify_options.fault = indpow::Fault::binom_off_by_one;
      }
      const auto report = indpow::run_verification(verify_options);
      if (json) {
        std::cout << report.to_json().dump(2) << '\n';
      } else {
        std::cout << report.to_text();
      }
      return report.overall() ? kExitVerified : kExitFailed;
    } else if (*exp) {
      if (!patterns_csv.empty()) {
        std::stringstream in(patterns_csv);
        for (std::string p; std::getline(in, p, ',');) {
          request.patterns.push_back(p);
        }
      }
      std::cout << indpow::render_export(request);
    }
  } catch (const indpow::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitVerified;
}
