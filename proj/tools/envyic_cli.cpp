// envyic: run auctions and IC diagnostics from the command line.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "envyic/adtypes_pricing.hpp"
#include "envyic/assignment.hpp"
#include "envyic/csv.hpp"
#include "envyic/dataset.hpp"
#include "envyic/experiments.hpp"
#include "envyic/instance_json.hpp"
#include "envyic/mechanism.hpp"
#include "envyic/metrics.hpp"
#include "envyic/regression.hpp"
#include "envyic/report_io.hpp"

namespace {

using namespace envyic;
using namespace envyic::harness;

const std::vector<std::string> kMechanisms{"vcg", "gsp", "gfp", "extended-gsp", "greedy-gsp", "greedy-externality"};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

GeneratorConfig load_config(const std::string& path) {
  return config_from_json(nlohmann::json::parse(read_text_file(path)));
}

int cmd_run(const std::string& instance_path, const std::string& tag, const std::string& report_path) {
  const AdTypesInstance instance = load_instance(instance_path);
  const auto mech = make_mechanism(tag, instance);
  nlohmann::json out;
  out["mechanism"] = mech->name();
  out["outcome"] = to_json(mech->run(instance));
  if (tag == "extended-gsp") {
    out["certificate"] = to_json(adtypes::extended_gsp_outcome(instance).certificate);
  } else if (tag == "vcg" && !has_common_curve(instance)) {
    out["certificate"] = to_json(assignment::solve_instance(instance).certificate);
  }
  std::cout << out.dump(2) << '\n';
  if (!report_path.empty()) {
    open_out(report_path) << to_json(metrics::verify_theorems(instance, *mech)).dump(2) << '\n';
  }
  return 0;
}

int cmd_check(const std::string& instance_path, const std::string& tag) {
  const AdTypesInstance instance = load_instance(instance_path);
  const auto mech = make_mechanism(tag, instance);
  const auto report = metrics::verify_theorems(instance, *mech);
  std::cout << to_json(report).dump(2) << '\n';
  return report.envy_dominates_regret ? 0 : 1;
}

int cmd_simulate(const std::string& config_path, std::size_t count, const std::string& experiment,
                 const std::string& out_path, std::string mechanism, Execution execution) {
  const auto raw = nlohmann::json::parse(read_text_file(config_path));
  GeneratorConfig cfg = config_from_json(raw);
  auto out = open_out(out_path);
  nlohmann::json summary;
  summary["experiment"] = experiment;
  summary["count"] = count;
  if (experiment == "gfp-sanity") {
    const auto result = gfp_sanity_experiment(cfg, count, execution);
    write_scatter_csv(out, result.rows, cfg);
    const auto& s = result.summary;
    summary["rows"] = s.rows;
    summary["envy_ge_regret"] = s.envy_ge_regret;
    summary["fraction_envy_ge_regret"] = s.fraction;
    summary["max_regret_minus_envy"] = money_to_json(s.max_regret_minus_envy);
    const ScatterRow single = single_slot_gfp_row();
    summary["single_slot_row"] = {{"ic_envy", money_to_json(single.ic_envy)},
                                  {"ic_regret", money_to_json(single.ic_regret)}};
  } else {
    if (!raw.contains("misreport_divisor")) cfg.misreport_divisor = 16;
    if (mechanism.empty()) mechanism = cfg.curve_classes.size() == 1 ? "gfp" : "extended-gsp";
    const auto result = swl_bound_experiment(cfg, count, mechanism, execution);
    write_swl_csv(out, result.rows, cfg);
    const auto& s = result.summary;
    summary["mechanism"] = mechanism;
    summary["misreport_divisor"] = money_to_json(cfg.misreport_divisor);
    summary["instances"] = s.instances;
    summary["applicable"] = s.applicable;
    summary["holds"] = s.holds;
    summary["fails"] = s.fails;
    summary["semi_smooth_violations"] = s.semi_smooth_violations;
    summary["regret_monotone_violations"] = s.regret_monotone_violations;
  }
  std::cout << summary.dump(2) << '\n';
  return 0;
}

int cmd_dataset(const std::string& config_path, std::size_t count, const std::string& tag, const std::string& out_path,
                Execution execution) {
  const GeneratorConfig cfg = load_config(config_path);
  const auto rule = tag == "greedy-gsp" ? adtypes::GreedyRule::Gsp : adtypes::GreedyRule::Externality;
  const auto rows = build_dataset(cfg, count, rule, execution);
  auto out = open_out(out_path);
  write_dataset_csv(out, rows, cfg);
  std::cout << rows.size() << " rows\n";
  return 0;
}

int cmd_regress(const std::string& data_path, const std::string& features, std::uint64_t seed) {
  const CsvTable table = read_csv(data_path);
  const FitResult fit = ols_fit_eval(table, parse_feature_set(features), seed);
  nlohmann::json out;
  out["features"] = features;
  out["r2_train"] = fit.r2_train;
  out["r2_test"] = fit.r2_test;
  out["train_rows"] = fit.train_rows;
  out["test_rows"] = fit.test_rows;
  out["coefficients"] = fit.coefficients;
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Auction runner and IC-Envy / IC-Regret diagnostics"};
  app.require_subcommand(1);
  bool serial = false;
  app.add_flag("--serial", serial, "Process instances on one thread (reference path)");

  std::string instance_path, mechanism, report_path;
  auto* run = app.add_subcommand("run", "Run one auction and print the outcome");
  run->add_option("--instance", instance_path)->required()->check(CLI::ExistingFile);
  run->add_option("--mechanism", mechanism)->required()->check(CLI::IsMember(kMechanisms));
  run->add_option("--report", report_path, "Write the diagnostics report here");

  auto* check = app.add_subcommand("check", "Diagnostics; exit 0 iff IC-Envy >= IC-Regret for every bidder");
  check->add_option("--instance", instance_path)->required()->check(CLI::ExistingFile);
  check->add_option("--mechanism", mechanism)->required()->check(CLI::IsMember(kMechanisms));

  std::string config_path, experiment, out_path, sim_mechanism;
  std::size_t count = 0;
  auto* simulate = app.add_subcommand("simulate", "Generated-instance experiments");
  simulate->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
  simulate->add_option("--count", count)->required();
  simulate->add_option("--experiment", experiment)->required()->check(CLI::IsMember({"gfp-sanity", "swl-bound"}));
  simulate->add_option("--out", out_path)->required();
  simulate->add_option("--mechanism", sim_mechanism, "swl-bound only; default gfp for one curve class")
      ->check(CLI::IsMember(kMechanisms));

  auto* dataset = app.add_subcommand("dataset", "Per-bidder envy / value / price features with regret labels");
  dataset->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
  dataset->add_option("--count", count)->required();
  dataset->add_option("--mechanism", mechanism)->required()->check(CLI::IsMember({"greedy-gsp", "greedy-externality"}));
  dataset->add_option("--out", out_path)->required();

  std::string data_path, features;
  std::uint64_t seed = 0;
  auto* regress = app.add_subcommand("regress", "OLS baseline on a dataset CSV");
  regress->add_option("--data", data_path)->required()->check(CLI::ExistingFile);
  regress->add_option("--features", features)->required()->check(CLI::IsMember({"envy", "price-value"}));
  regress->add_option("--seed", seed)->required();

  CLI11_PARSE(app, argc, argv);
  const Execution execution = serial ? Execution::Serial : Execution::Parallel;
  try {
    if (*run) return cmd_run(instance_path, mechanism, report_path);
    if (*check) return cmd_check(instance_path, mechanism);
    if (*simulate) return cmd_simulate(config_path, count, experiment, out_path, sim_mechanism, execution);
    if (*dataset) return cmd_dataset(config_path, count, mechanism, out_path, execution);
    if (*regress) return cmd_regress(data_path, features, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
