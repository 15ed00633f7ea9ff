#include "envyic/experiments.hpp"

#include "envyic/csv.hpp"
#include "envyic/errors.hpp"
#include "envyic/instance_json.hpp"
#include "envyic/mechanism.hpp"

namespace envyic::harness {

namespace {

std::vector<ScatterRow> scatter_rows(std::size_t auction_id, const AdTypesInstance& instance, const Mechanism& mech) {
  const Outcome outcome = mech.run(instance);
  std::vector<ScatterRow> rows;
  for (std::size_t i = 0; i < instance.num_bidders(); ++i) {
    rows.push_back({auction_id, i, metrics::ic_envy(i, instance, outcome), metrics::ic_regret(i, instance, mech).value});
  }
  return rows;
}

std::string rng_comment(const GeneratorConfig& cfg) {
  return "rng=" + std::string(kRngAlgorithm) + " seed=" + std::to_string(cfg.seed);
}

}  // namespace

GfpSanitySummary summarize(const std::vector<ScatterRow>& rows) {
  GfpSanitySummary s;
  s.rows = rows.size();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Money gap = rows[k].ic_regret - rows[k].ic_envy;
    if (gap <= 0) ++s.envy_ge_regret;
    if (k == 0 || gap > s.max_regret_minus_envy) s.max_regret_minus_envy = gap;
  }
  if (s.rows > 0) s.fraction = static_cast<double>(s.envy_ge_regret) / static_cast<double>(s.rows);
  return s;
}

GfpSanityResult gfp_sanity_experiment(const GeneratorConfig& cfg, std::size_t count, Execution execution) {
  if (cfg.curve_classes.size() != 1) throw InvalidInstance("GFP needs a single curve class");
  const RegularMechanism gfp(position::MechanismKind::gfp());
  auto chunks = indexed_map(count, execution, [&](std::size_t k) {
    return scatter_rows(k, generate_instance(cfg, k), gfp);
  });
  GfpSanityResult out;
  for (auto& chunk : chunks) out.rows.insert(out.rows.end(), chunk.begin(), chunk.end());
  out.summary = summarize(out.rows);
  return out;
}

ScatterRow single_slot_gfp_row() {
  AdTypesInstance instance;
  instance.values = {Money(10), Money(8)};
  instance.bids = instance.values;
  instance.curves.assign(2, DiscountCurve({Money(1)}));
  const RegularMechanism gfp(position::MechanismKind::gfp());
  return scatter_rows(0, instance, gfp).front();
}

void write_scatter_csv(std::ostream& out, const std::vector<ScatterRow>& rows, const GeneratorConfig& cfg) {
  CsvWriter csv(out);
  csv.comment(rng_comment(cfg));
  csv.header({"auction_id", "bidder", "ic_envy", "ic_regret"});
  for (const auto& r : rows) {
    csv.cell(r.auction_id).cell(r.bidder).cell(r.ic_envy).cell(r.ic_regret);
    csv.end_row();
  }
}

SwlBoundResult swl_bound_experiment(const GeneratorConfig& cfg, std::size_t count, const std::string& mechanism,
                                    Execution execution) {
  SwlBoundResult out;
  out.rows = indexed_map(count, execution, [&](std::size_t k) {
    const AdTypesInstance instance = generate_instance(cfg, k);
    const auto mech = make_mechanism(mechanism, instance);
    return SwlBoundRow{k, metrics::verify_theorems(instance, *mech)};
  });
  auto& s = out.summary;
  s.instances = out.rows.size();
  for (const auto& row : out.rows) {
    const auto& r = row.report;
    if (!r.regret_monotone_ok) ++s.regret_monotone_violations;
    if (!r.swl_bound_applicable) continue;
    ++s.applicable;
    if (r.swl_bound_holds) ++s.holds;
    else ++s.fails;
    if (!r.semi_smooth_ok) ++s.semi_smooth_violations;
  }
  return out;
}

void write_swl_csv(std::ostream& out, const std::vector<SwlBoundRow>& rows, const GeneratorConfig& cfg) {
  CsvWriter csv(out);
  csv.comment(rng_comment(cfg));
  csv.header({"auction_id", "applicable", "total_envy", "sw_reported", "sw_opt", "swl_reported", "bound_holds",
              "semi_smooth_ok", "regret_monotone_ok"});
  for (const auto& row : rows) {
    const auto& r = row.report;
    csv.cell(row.auction_id).cell(std::size_t{r.swl_bound_applicable}).cell(r.total_envy).cell(r.sw_reported);
    csv.cell(r.sw_opt).cell(Money(r.sw_opt - r.sw_reported)).cell(std::size_t{r.swl_bound_holds});
    csv.cell(std::size_t{r.semi_smooth_ok}).cell(std::size_t{r.regret_monotone_ok});
    csv.end_row();
  }
}

}  // namespace envyic::harness
