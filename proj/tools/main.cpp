#include <CLI11.hpp>

#include <cstdint>
#include <iostream>

#include "commands.hpp"

namespace cli = lexseg::cli;

int main(int argc, char** argv) {
  CLI::App app{
      "lexseg: lexsegment ideals, standard tableaux, toric and Rees "
      "Groebner bases, linear-quotients certification"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized probes")
      ->capture_default_str();

  cli::SegmentArgs seg;
  bool as_json = false;

  auto add_segment = [&](CLI::App* sub) {
    sub->add_option("--n", seg.n, "number of variables")->required();
    sub->add_option("--d", seg.d, "generator degree")->required();
    sub->add_option("--u", seg.u, "upper bound, exponent CSV")->required();
    sub->add_option("--v", seg.v, "lower bound, exponent CSV")->required();
    sub->add_flag("--json", as_json, "JSON output");
  };

  auto* classify = app.add_subcommand(
      "classify", "classify a lexsegment ideal's linear-resolution status");
  int shadow_iters = -1;
  add_segment(classify);
  classify->add_option("--shadow-iters", shadow_iters,
                       "completeness budget (default n*d)");

  auto* tableau =
      app.add_subcommand("tableau", "standard tableau of a support multiset");
  int tab_n = 0;
  int tab_d = 0;
  std::string support_csv;
  std::string rows_text;
  bool check = false;
  tableau->add_option("--n", tab_n, "number of variables")->required();
  tableau->add_option("--d", tab_d, "row width");
  tableau->add_option("--support", support_csv,
                      "index multiset, e.g. 1,1,2,3");
  tableau->add_option("--rows", rows_text,
                      "semicolon-separated rows, e.g. 1,6,7;1,6,8");
  tableau->add_flag("--check", check, "validate the supplied rows");
  tableau->add_flag("--json", as_json, "JSON output");

  auto* power = app.add_subcommand(
      "power-quotients", "certify linear quotients of I^N");
  int power_n = 1;
  add_segment(power);
  power->add_option("--N", power_n, "power to certify")->required();

  auto* rees = app.add_subcommand(
      "rees-gb", "Groebner basis of the Rees presentation ideal");
  std::string sigma_name = "revlex-dec";
  bool verify = false;
  add_segment(rees);
  rees->add_option("--sigma", sigma_name, "x-variable order")
      ->check(CLI::IsMember({"revlex-dec", "lex"}))
      ->capture_default_str();
  rees->add_flag("--verify", verify,
                 "run the sigma-exchange and Buchberger checks");

  auto* exchange =
      app.add_subcommand("exchange", "check an exchange property");
  std::string mode = "sigma";
  int bound = 2;
  add_segment(exchange);
  exchange->add_option("--mode", mode, "l or sigma")
      ->check(CLI::IsMember({"l", "sigma"}))
      ->capture_default_str();
  exchange->add_option("--bound", bound, "maximal T-degree")
      ->capture_default_str();
  exchange->add_option("--sigma", sigma_name, "x-variable order (sigma mode)")
      ->check(CLI::IsMember({"revlex-dec", "lex"}))
      ->capture_default_str();

  auto* sweep = app.add_subcommand(
      "sweep", "classify and certify every (u,v) pair in a grid");
  int n_max = 3;
  int d_max = 2;
  int big_n_max = 2;
  int jobs = 0;
  int probes = 4;
  sweep->add_option("--n-max", n_max, "largest variable count")->required();
  sweep->add_option("--d-max", d_max, "largest degree")->required();
  sweep->add_option("--N-max", big_n_max, "largest certified power")
      ->required();
  sweep->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  sweep->add_option("--probes", probes,
                    "random closure probes per record");
  sweep->add_flag("--json", as_json, "one JSON record per line");

  auto* paper = app.add_subcommand(
      "paper-examples", "reproduce the built-in golden examples");
  paper->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (classify->parsed())
      return cli::cmd_classify(seg, shadow_iters, as_json);
    if (tableau->parsed()) {
      if (check) {
        if (rows_text.empty())
          throw lexseg::ValidationError("--check needs --rows");
        return cli::cmd_tableau_check(tab_n, rows_text, as_json);
      }
      if (support_csv.empty())
        throw lexseg::ValidationError("tableau needs --support or --check");
      if (tab_d < 1) throw lexseg::ValidationError("--d must be positive");
      return cli::cmd_tableau_support(tab_n, tab_d, support_csv, as_json);
    }
    if (power->parsed())
      return cli::cmd_power_quotients(seg, power_n, as_json);
    if (rees->parsed())
      return cli::cmd_rees(seg, sigma_name, verify, as_json);
    if (exchange->parsed())
      return cli::cmd_exchange(seg, mode, bound, sigma_name, as_json);
    if (sweep->parsed())
      return cli::cmd_sweep(n_max, d_max, big_n_max, as_json, seed, jobs,
                            probes);
    if (paper->parsed()) return cli::cmd_paper_examples(as_json);
  } catch (const lexseg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  }
  return cli::kExitUsage;
}
