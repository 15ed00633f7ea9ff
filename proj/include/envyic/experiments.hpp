#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "envyic/generator.hpp"
#include "envyic/metrics.hpp"
#include "envyic/parallel.hpp"

namespace envyic::harness {

struct ScatterRow {
  std::size_t auction_id = 0;
  std::size_t bidder = 0;
  Money ic_envy;
  Money ic_regret;
};

struct GfpSanitySummary {
  std::size_t rows = 0;
  std::size_t envy_ge_regret = 0;
  double fraction = 0;             // envy_ge_regret / rows, 0 when empty
  Money max_regret_minus_envy{0};  // 0 when empty
};

struct GfpSanityResult {
  std::vector<ScatterRow> rows;
  GfpSanitySummary summary;
};

/// Truthful GFP auctions on a single-curve config; one row per (auction, bidder).
/// Throws InvalidInstance if the config produces more than one curve class.
GfpSanityResult gfp_sanity_experiment(const GeneratorConfig& cfg, std::size_t count,
                                      Execution execution = Execution::Parallel);
GfpSanitySummary summarize(const std::vector<ScatterRow>& rows);

/// Single slot, values (10, 8), quantum 0.01: the winner's row, envy 0 and
/// regret 1.99.
ScatterRow single_slot_gfp_row();

void write_scatter_csv(std::ostream& out, const std::vector<ScatterRow>& rows, const GeneratorConfig& cfg);

struct SwlBoundRow {
  std::size_t auction_id = 0;
  metrics::DiagnosticsReport report;
};

struct SwlBoundSummary {
  std::size_t instances = 0;
  std::size_t applicable = 0;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t semi_smooth_violations = 0;      // over applicable instances
  std::size_t regret_monotone_violations = 0;  // over all instances
};

struct SwlBoundResult {
  std::vector<SwlBoundRow> rows;
  SwlBoundSummary summary;
};

/// Full diagnostics on misreported profiles (set cfg.misreport_divisor).
SwlBoundResult swl_bound_experiment(const GeneratorConfig& cfg, std::size_t count, const std::string& mechanism,
                                    Execution execution = Execution::Parallel);

void write_swl_csv(std::ostream& out, const std::vector<SwlBoundRow>& rows, const GeneratorConfig& cfg);

}  // namespace envyic::harness
