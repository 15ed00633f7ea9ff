#include <doctest.h>

#include "envyic/errors.hpp"
#include "envyic/instance_json.hpp"
#include "envyic/money.hpp"
#include "envyic/types.hpp"
#include "support.hpp"

using namespace envyic;

namespace {
Money M(const char* s) { return parse_money(s); }
}  // namespace

TEST_CASE("money parsing and formatting") {
  CHECK(M("12") == 12);
  CHECK(M("-0.25") == Money(-1, 4));
  CHECK(M("1e-3") == Money(1, 1000));
  CHECK(M("2.5E1") == 25);
  CHECK(M(" 3/6 ") == Money(1, 2));
  CHECK(M("-3/6") == Money(-1, 2));
  CHECK(M(".5") == Money(1, 2));
  CHECK_THROWS_AS(M(""), std::invalid_argument);
  CHECK_THROWS_AS(M("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(M("abc"), std::invalid_argument);
  CHECK_THROWS_AS(M("1/0"), std::invalid_argument);

  CHECK(to_string(Money(199, 100)) == "1.99");
  CHECK(to_string(Money(-1, 8)) == "-0.125");
  CHECK(to_string(Money(1, 3)) == "1/3");
  CHECK(to_string(Money(7)) == "7");
  CHECK(to_fixed(Money(1, 3), 6) == "0.333333");
  CHECK(to_fixed(Money(2, 3), 6) == "0.666667");
  CHECK(to_fixed(Money(-1, 2000000), 6) == "-0.000001");
  CHECK(to_fixed(Money(5), 6) == "5.000000");
}

TEST_CASE("money round trip through text") {
  testkit::Draw d(11);
  for (int k = 0; k < 500; ++k) {
    Money x(static_cast<long>(d.below(100000)) - 50000, static_cast<unsigned long>(d.between(1, 4000)));
    x.canonicalize();
    CHECK(parse_money(to_string(x)) == x);
  }
}

TEST_CASE("grid rounding") {
  const Money q(1, 100);
  CHECK(floor_to_multiple(M("8.005"), q) == M("8"));
  CHECK(ceil_to_multiple(M("8.005"), q) == M("8.01"));
  CHECK(floor_to_multiple(M("-0.005"), q) == M("-0.01"));
  CHECK(round_to_multiple(M("2.0000001"), 1) == 2);
  CHECK(round_to_multiple(M("0.9999999"), 1) == 1);
  CHECK(round_to_multiple(M("1.5"), 1) == 1);  // halves go down
  CHECK(quantize(2.71, q) == M("2.71"));
  CHECK(quantize(0.1 + 0.2, q) == M("0.3"));
}

TEST_CASE("rational gcd") {
  std::vector<Money> v{10, 9, 8, 7, 6, 4};
  CHECK(rational_gcd(v) == 1);
  std::vector<Money> w{M("0.5"), M("0.75"), 0};
  CHECK(rational_gcd(w) == Money(1, 4));
  std::vector<Money> z{0, 0};
  CHECK(rational_gcd(z) == 1);
  CHECK(max_of(v) == 10);
  CHECK(sum_of(v) == 44);
}

TEST_CASE("discounted value and utility") {
  const DiscountCurve c({1, M("0.5")});
  CHECK(discounted_value(10, c, Slot(1)) == 5);
  CHECK(discounted_value(10, c, Slot::unassigned()) == 0);
  CHECK(discounted_value(7, DiscountCurve({M("0.9"), M("0.81")}), Slot(1)) == M("5.67"));
  CHECK_THROWS_AS(discounted_value(7, c, Slot(2)), RangeError);
  CHECK(utility(10, DiscountCurve({1}), Slot(0), 8) == 2);
  CHECK(utility(10, DiscountCurve({1}), Slot::unassigned(), 0) == 0);
  CHECK(utility(8, c, Slot(1), M("2.5")) == M("1.5"));
}

TEST_CASE("curve validation") {
  CHECK_THROWS_AS(DiscountCurve({M("0.5"), 1}), InvalidInstance);
  CHECK_THROWS_AS(DiscountCurve({M("-0.1")}), InvalidInstance);
  CHECK(DiscountCurve::geometric(M("0.9"), 5).weights() ==
        std::vector<Money>{M("0.9"), M("0.81"), M("0.729"), M("0.6561"), M("0.59049")});
  CHECK_THROWS_AS(DiscountCurve::geometric(0, 3), InvalidInstance);
  CHECK_THROWS_AS(DiscountCurve::geometric(M("1.1"), 3), InvalidInstance);
  const DiscountCurve c({1, M("0.5")});
  CHECK(c.padded(5) == 0);
}

TEST_CASE("instance validation") {
  AdTypesInstance inst;
  inst.values = {1, 2};
  inst.bids = {1};
  inst.curves.assign(2, DiscountCurve({1}));
  CHECK_THROWS_AS(inst.validate(), DimensionError);
  inst.bids = {1, -1};
  CHECK_THROWS_AS(inst.validate(), InvalidInstance);
  inst.bids = {1, 2};
  inst.curves[1] = DiscountCurve({1, 1});
  CHECK_THROWS_AS(inst.validate(), DimensionError);
}

TEST_CASE("outcome validation rejects a shared slot") {
  Outcome o{{Slot(0), Slot(0)}, {0, 0}};
  CHECK_THROWS_AS(o.validate(), InvalidInstance);
  Outcome ok{{Slot(1), Slot::unassigned(), Slot(0)}, {1, 0, 2}};
  CHECK_NOTHROW(ok.validate());
  const auto occ = ok.occupants(3);
  CHECK(occ[0] == std::optional<std::size_t>(2));
  CHECK(occ[1] == std::optional<std::size_t>(0));
  CHECK_FALSE(occ[2].has_value());
}

TEST_CASE("instance JSON round trip") {
  testkit::Draw d(5);
  for (int k = 0; k < 200; ++k) {
    auto inst = testkit::random_ad_types(d, d.between(1, 6), d.between(1, 6), Money(1, 3), 30);
    inst.bids[0] = inst.bids[0] / 7;
    const auto back = ad_types_from_json(nlohmann::json::parse(to_json(inst).dump()));
    CHECK(back.values == inst.values);
    CHECK(back.bids == inst.bids);
    CHECK(back.curves == inst.curves);
    CHECK(back.quantum == inst.quantum);
  }
}

TEST_CASE("instance JSON shorthands") {
  const auto inst = ad_types_from_json(nlohmann::json::parse(R"({"values": [10, "8"], "curve": ["1", 0.5]})"));
  CHECK(inst.bids == inst.values);
  CHECK(inst.curves.size() == 2);
  CHECK(inst.curves[1].weights() == std::vector<Money>{1, M("0.5")});
  CHECK(has_common_curve(inst));
  CHECK(to_position(inst).curve == inst.curves[0]);
  CHECK_THROWS(ad_types_from_json(nlohmann::json::parse(R"({"values": ["x"], "curve": [1]})")));
}
