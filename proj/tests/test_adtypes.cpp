#include <doctest.h>

#include "envyic/adtypes_pricing.hpp"
#include "envyic/mechanism.hpp"
#include "envyic/metrics.hpp"
#include "envyic/position_auction.hpp"
#include "support.hpp"

using namespace envyic;
using namespace envyic::adtypes;

namespace {

Money M(const char* s) { return parse_money(s); }

AdTypesInstance golden_instance() {
  AdTypesInstance inst;
  inst.values = {10, 7, 4};
  inst.bids = inst.values;
  inst.curves = {DiscountCurve({1, M("0.9"), M("0.8")}), DiscountCurve({1, Money(6, 7), Money(4, 7)}),
                 DiscountCurve({1, 0, 0})};
  return inst;
}

AdTypesInstance position_fixture() {
  AdTypesInstance inst;
  inst.values = {10, 8, 5};
  inst.bids = inst.values;
  inst.curves.assign(3, DiscountCurve({1, M("0.5"), M("0.2")}));
  return inst;
}

AdTypesInstance two_types() {
  AdTypesInstance inst;
  inst.values = {10, 12};
  inst.bids = inst.values;
  inst.curves = {DiscountCurve({M("0.9"), M("0.81")}), DiscountCurve({M("0.7"), M("0.49")})};
  return inst;
}

}  // namespace

TEST_CASE("threshold t on the golden instance") {
  const auto cert = assignment::solve_min_dual_mwpm(assignment::WeightMatrix({{10, 9, 8}, {7, 6, 4}, {4, 0, 0}}));
  const auto sets = assignment::tight_edge_sets(cert);
  CHECK(threshold_t(2, 0, sets[0], cert.weights) == 0);
  CHECK(threshold_t(0, 0, {}, cert.weights) == 0);
}

TEST_CASE("threshold t in the position special case") {
  const auto inst = position_fixture();
  const auto cert = assignment::solve_min_dual_mwpm(assignment::weights_of(inst));
  const auto sets = assignment::tight_edge_sets(cert);
  CHECK(threshold_t(0, 0, sets[0], cert.weights) == 8);
}

TEST_CASE("extended GSP") {
  const auto g = extended_gsp_outcome(golden_instance());
  CHECK(g.outcome.assignment == std::vector<Slot>{Slot(2), Slot(1), Slot(0)});
  CHECK(g.outcome.payments == std::vector<Money>{0, 1, 2});
  CHECK(check_price_monotonicity(g.prices));

  const auto p = extended_gsp_outcome(position_fixture());
  CHECK(p.outcome.payments == std::vector<Money>{8, M("2.5"), 0});

  AdTypesInstance lone;
  lone.values = {7};
  lone.bids = lone.values;
  lone.curves = {DiscountCurve({1})};
  CHECK(extended_gsp_outcome(lone).outcome.payments == std::vector<Money>{0});
}

TEST_CASE("extended GSP reduces to GSP on position instances") {
  testkit::Draw d(8);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = d.between(1, 6);
    const auto inst = testkit::random_position(d, n, d.between(1, 6), Money(1, 10), true);
    const auto gsp = position::run_regular(inst.bids, inst.curves[0], position::MechanismKind::gsp());
    CHECK(extended_gsp_outcome(inst).outcome == gsp);
  }
}

TEST_CASE("matching VCG") {
  CHECK(vcg_outcome(golden_instance()).payments == std::vector<Money>{0, 1, 2});
  const auto p = vcg_outcome(position_fixture());
  CHECK(p.payments == std::vector<Money>{M("5.5"), M("1.5"), 0});
  AdTypesInstance lone;
  lone.values = {7};
  lone.bids = lone.values;
  lone.curves = {DiscountCurve({1})};
  CHECK(vcg_outcome(lone).payments == std::vector<Money>{0});
}

TEST_CASE("matching VCG agrees with rank VCG on random position instances") {
  testkit::Draw d(9);
  for (int t = 0; t < 200; ++t) {
    const auto inst = testkit::random_position(d, d.between(1, 6), d.between(1, 6), Money(1, 10));
    const auto rank = position::run_regular(inst.bids, inst.curves[0], position::MechanismKind::vcg());
    const auto matched = vcg_outcome(inst);
    // Slots with alpha = 0 may be assigned differently; prices must agree.
    for (std::size_t i = 0; i < inst.num_bidders(); ++i) {
      CHECK(matched.payments[i] == rank.payments[i]);
    }
  }
}

TEST_CASE("greedy mechanisms") {
  const auto inst = two_types();
  const auto gsp = greedy_outcome(inst, GreedyRule::Gsp);
  CHECK(gsp.assignment == std::vector<Slot>{Slot(0), Slot(1)});
  CHECK(gsp.payments == std::vector<Money>{M("8.4"), 0});
  const auto ext = greedy_outcome(inst, GreedyRule::Externality);
  CHECK(ext.assignment == gsp.assignment);
  CHECK(ext.payments == std::vector<Money>{M("2.52"), 0});

  AdTypesInstance lone;
  lone.values = {7};
  lone.bids = lone.values;
  lone.curves = {DiscountCurve({1, M("0.5")})};
  CHECK(greedy_outcome(lone, GreedyRule::Gsp).payments == std::vector<Money>{0});
  CHECK(greedy_outcome(lone, GreedyRule::Externality).payments == std::vector<Money>{0});
}

TEST_CASE("greedy GSP equals GSP on position instances") {
  testkit::Draw d(10);
  for (int t = 0; t < 200; ++t) {
    const auto inst = testkit::random_position(d, d.between(1, 7), d.between(1, 7), Money(0), true);
    const auto gsp = position::run_regular(inst.bids, inst.curves[0], position::MechanismKind::gsp());
    CHECK(greedy_outcome(inst, GreedyRule::Gsp) == gsp);
  }
}

TEST_CASE("extended GSP prices are monotone per bidder") {
  testkit::Draw d(12);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = d.between(1, 6);
    const auto g = extended_gsp_outcome(testkit::random_ad_types(d, n, n));
    CHECK(check_price_monotonicity(g.prices));
  }
}

TEST_CASE("VCG price rows are monotone") {
  ExtendedGspPrices flat;
  flat.grid.assign(3, std::vector<Money>{2, 1, 0});
  CHECK(check_price_monotonicity(flat));
  flat.grid[1] = {1, 2, 0};
  CHECK_FALSE(check_price_monotonicity(flat));
}

TEST_CASE("mechanism factory") {
  const auto pos = position_fixture();
  CHECK(make_mechanism("vcg", pos)->deviation_rule() == DeviationRule::Rank);
  CHECK(make_mechanism("vcg", golden_instance())->deviation_rule() == DeviationRule::MatchingBreakpoints);
  CHECK_THROWS(make_mechanism("gsp", golden_instance()));
  CHECK_THROWS(make_mechanism("nope", pos));
  for (const char* tag : {"vcg", "gsp", "gfp", "extended-gsp", "greedy-gsp", "greedy-externality"}) {
    CHECK_NOTHROW(make_mechanism(tag, pos)->run(pos).validate());
  }
}

// Underbidding keeps bidder 1 on slot 1 but drops its own weight below the
// tight edge that set t, so the payment falls to p_1. No envy covers that.
TEST_CASE("extended GSP regret can exceed envy without a slot change") {
  AdTypesInstance inst;
  inst.values = {4, 12, 16};
  inst.bids = inst.values;
  inst.curves = {DiscountCurve({1, M("0.6"), M("0.45")}), DiscountCurve({M("0.85"), M("0.75"), M("0.05")}),
                 DiscountCurve({M("0.4"), M("0.3"), M("0.1")})};
  const ExtendedGspMechanism egsp;
  const Outcome truthful = egsp.run(inst);
  CHECK(truthful.assignment[1] == Slot(1));
  CHECK(metrics::ic_envy(1, inst, truthful) == 0);
  const Outcome low = egsp.run(inst.with_bid(1, M("0.86")));
  CHECK(low.assignment[1] == Slot(1));
  CHECK(low.payments[1] < truthful.payments[1]);
  const auto regret = metrics::ic_regret(1, inst, egsp);
  CHECK(regret.value == M("1.2"));
}
