#include <doctest.h>

#include <set>

#include "envyic/assignment.hpp"
#include "envyic/errors.hpp"
#include "envyic/position_auction.hpp"
#include "support.hpp"

using namespace envyic;
using namespace envyic::assignment;

namespace {

Money M(const char* s) { return parse_money(s); }

// Bidders valued (10,9,8), (7,6,4), (4,0,0) on three slots.
WeightMatrix golden_weights() { return WeightMatrix({{10, 9, 8}, {7, 6, 4}, {4, 0, 0}}); }

AdTypesInstance golden_instance() {
  AdTypesInstance inst;
  inst.values = {10, 7, 4};
  inst.bids = inst.values;
  inst.curves = {DiscountCurve({1, M("0.9"), M("0.8")}), DiscountCurve({1, Money(6, 7), Money(4, 7)}),
                 DiscountCurve({1, 0, 0})};
  return inst;
}

std::set<Edge> as_set(const std::vector<Edge>& edges) { return {edges.begin(), edges.end()}; }

DualCertificate with_prices(const WeightMatrix& w, std::vector<std::size_t> matching, std::vector<Money> p) {
  DualCertificate cert;
  cert.weights = w;
  cert.matching = std::move(matching);
  cert.slot_prices = std::move(p);
  for (std::size_t i = 0; i < w.rows(); ++i) {
    cert.bidder_utilities.push_back(w.at(i, cert.matching[i]) - cert.slot_prices[cert.matching[i]]);
  }
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (cert.bidder_utilities[i] + cert.slot_prices[j] == w.at(i, j)) cert.tight_edges.emplace_back(i, j);
    }
  }
  return cert;
}

}  // namespace

TEST_CASE("balancing pads or trims slots") {
  testkit::Draw d(1);
  auto wide = testkit::random_ad_types(d, 3, 2);
  auto b = balance(wide);
  CHECK(b.num_slots() == 3);
  for (const auto& c : b.curves) CHECK(c.weights()[2] == 0);

  auto narrow = testkit::random_ad_types(d, 2, 4);
  b = balance(narrow);
  CHECK(b.num_slots() == 2);
  CHECK(b.curves[0].weights() == std::vector<Money>(narrow.curves[0].weights().begin(),
                                                    narrow.curves[0].weights().begin() + 2));
  auto square = testkit::random_ad_types(d, 3, 3);
  b = balance(square);
  CHECK(b.curves == square.curves);
}

TEST_CASE("perturbation") {
  const auto p = perturb(WeightMatrix({{1, 1}, {1, 1}}));
  std::set<Money> distinct(p.weights.values().begin(), p.weights.values().end());
  CHECK(distinct.size() == 4);
  CHECK(max_weight_matching(p.weights) == std::vector<std::size_t>{0, 1});

  const auto g = perturb(golden_weights());
  CHECK(g.delta == 1);
  CHECK(g.grid == 1);
  CHECK(max_weight_matching(g.weights) == std::vector<std::size_t>{2, 1, 0});
  // Rows stay strictly decreasing after perturbation.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j + 1 < 3; ++j) CHECK(g.weights.at(i, j) > g.weights.at(i, j + 1));
  }
}

TEST_CASE("golden instance certificate") {
  const auto cert = solve_min_dual_mwpm(golden_weights());
  CHECK(cert.matching == std::vector<std::size_t>{2, 1, 0});
  CHECK(cert.slot_prices == std::vector<Money>{2, 1, 0});
  CHECK(cert.bidder_utilities == std::vector<Money>{8, 5, 2});
  CHECK(as_set(cert.tight_edges) == std::set<Edge>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});
  const auto sets = tight_edge_sets(cert);
  CHECK(as_set(sets[1]) == std::set<Edge>{{1, 1}, {0, 1}, {0, 2}});
  for (std::size_t j = 1; j < 3; ++j) {
    for (const auto& e : sets[j]) CHECK(as_set(sets[j - 1]).count(e) == 1);
  }
  const auto s = verify_structure(cert);
  CHECK(s.lowest_tight);
  CHECK(s.free_path);
  CHECK(s.monotone_prices);
  CHECK(s.clearing);
  CHECK(duals_feasible(cert));
}

TEST_CASE("golden instance through the perturbed pipeline") {
  const auto pm = solve_instance(golden_instance());
  CHECK(pm.rounded_prices() == std::vector<Money>{2, 1, 0});
  CHECK(pm.slot_of(2) == Slot(0));
  CHECK(pm.slot_of(1) == Slot(1));
  CHECK(pm.slot_of(0) == Slot(2));
  CHECK(verify_structure(pm.certificate).all());
}

TEST_CASE("inflated prices are rejected by the free-path check") {
  const auto cert = with_prices(golden_weights(), {2, 1, 0}, {3, 1, 0});
  const auto s = verify_structure(cert);
  CHECK(s.clearing);
  CHECK_FALSE(s.free_path);
}

TEST_CASE("single bidder single slot") {
  const auto cert = solve_min_dual_mwpm(WeightMatrix(std::vector<std::vector<Money>>{{7}}));
  CHECK(cert.matching == std::vector<std::size_t>{0});
  CHECK(cert.slot_prices == std::vector<Money>{0});
  CHECK(cert.bidder_utilities == std::vector<Money>{7});
  CHECK(verify_structure(cert).all());
}

TEST_CASE("position special case matches VCG") {
  const DiscountCurve curve({1, M("0.5"), M("0.2")});
  AdTypesInstance inst;
  inst.values = {10, 8, 5};
  inst.bids = inst.values;
  inst.curves.assign(3, curve);
  const auto cert = solve_min_dual_mwpm(weights_of(inst));
  CHECK(cert.matching == std::vector<std::size_t>{0, 1, 2});
  CHECK(cert.slot_prices == std::vector<Money>{M("5.5"), M("1.5"), 0});
  const auto vcg = position::run_regular(inst.bids, curve, position::MechanismKind::vcg());
  CHECK(vcg.payments == cert.slot_prices);
}

TEST_CASE("non-square input is rejected") {
  CHECK_THROWS_AS(solve_min_dual_mwpm(WeightMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(max_weight_matching(WeightMatrix(3, 2)), DimensionError);
}

TEST_CASE("payment rounding") {
  const std::vector<Money> raw{M("2.0000001"), M("0.9999999")};
  CHECK(round_payments(raw, 1) == std::vector<Money>{2, 1});
}

TEST_CASE("Hungarian agrees with brute force on rectangular matrices") {
  testkit::Draw d(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = d.between(1, 5), c = d.between(1, 5);
    WeightMatrix w(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) w.at(i, j) = d.steps(-5, 20, Money(1, 3));
    }
    CHECK(max_matching_value(w) == testkit::brute_force_max(w));
  }
}

TEST_CASE("minimal prices equal the removal oracle") {
  testkit::Draw d(4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = d.between(1, 5);
    const auto inst = testkit::random_ad_types(d, n, n);
    const auto w = weights_of(inst);
    // Unperturbed: the minimal prices do not depend on which optimum is found.
    const auto cert = solve_min_dual_mwpm(w);
    CHECK(cert.slot_prices == testkit::oracle_min_prices(w));
    CHECK(duals_feasible(cert));
    // Perturbed and rounded back.
    CHECK(solve_instance(inst).rounded_prices() == testkit::oracle_min_prices(w));
  }
}

// Unique optimum, distinct weights. Bidder 1 holds slot 0 yet is also tight
// with slot 1, whose minimal price it pins: 11.2 - 9.35 == 8.4 - 6.55.
TEST_CASE("a bidder can be tight with a slot below its own") {
  const auto cert = solve_min_dual_mwpm(WeightMatrix(std::vector<std::vector<Money>>{
      {M("15.3"), M("11.9"), M("5.95")}, {M("11.2"), M("8.4"), M("1.4")}, {M("15.2"), M("14.4"), M("5.6")}}));
  CHECK(cert.matching == std::vector<std::size_t>{2, 0, 1});
  CHECK(cert.slot_prices == std::vector<Money>{M("9.35"), M("6.55"), 0});
  CHECK(as_set(cert.tight_edges).count(Edge{1, 1}) == 1);
  const auto s = verify_structure(cert);
  CHECK_FALSE(s.lowest_tight);
  CHECK(s.free_path);
  CHECK(s.monotone_prices);
  CHECK(s.clearing);
}

// Lowering bidder 2 from 11 to 1 moves it to slot 2, and the tight edges
// filtered at slot 2 change owner.
TEST_CASE("tight sets at the new slot can change after a bid decrease") {
  AdTypesInstance inst;
  inst.values = {16, 8, 11};
  inst.bids = inst.values;
  inst.curves = {DiscountCurve({1, M("0.85"), M("0.6")}), DiscountCurve({1, M("0.75"), M("0.6")}),
                 DiscountCurve({M("0.95"), M("0.9"), M("0.75")})};
  const auto before = solve_instance(inst);
  const auto after = solve_instance(inst.with_bid(2, 1));
  CHECK(before.slot_of(2) == Slot(1));
  CHECK(after.slot_of(2) == Slot(2));
  CHECK(as_set(tight_edge_sets(before.certificate)[2]) == std::set<Edge>{{1, 2}});
  CHECK(as_set(tight_edge_sets(after.certificate)[2]) == std::set<Edge>{{2, 2}});
}
