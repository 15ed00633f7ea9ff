#include "envyic/instance_json.hpp"

#include <fstream>
#include <sstream>

#include "envyic/errors.hpp"

namespace envyic {
namespace {

std::vector<Money> money_list(const nlohmann::json& node, const char* key) {
  if (!node.is_array()) throw InvalidInstance(std::string("'") + key + "' must be an array");
  std::vector<Money> out;
  out.reserve(node.size());
  for (const auto& x : node) out.push_back(money_from_json(x));
  return out;
}

nlohmann::json money_array(const std::vector<Money>& xs) {
  auto arr = nlohmann::json::array();
  for (const auto& x : xs) arr.push_back(money_to_json(x));
  return arr;
}

}  // namespace

nlohmann::json money_to_json(const Money& value) { return to_string(value); }

Money money_from_json(const nlohmann::json& node) {
  if (node.is_string()) return parse_money(node.get<std::string>());
  if (node.is_number_integer()) return Money(mpz_class(node.dump(), 10));
  if (node.is_number()) return parse_money(node.dump());
  throw InvalidInstance("expected an amount, got " + node.dump());
}

nlohmann::json to_json(const AdTypesInstance& instance) {
  nlohmann::json out;
  out["values"] = money_array(instance.values);
  out["bids"] = money_array(instance.bids);
  auto curves = nlohmann::json::array();
  for (const auto& c : instance.curves) curves.push_back(money_array(c.weights()));
  out["curves"] = std::move(curves);
  out["quantum"] = money_to_json(instance.quantum);
  return out;
}

AdTypesInstance ad_types_from_json(const nlohmann::json& node) {
  if (!node.is_object()) throw InvalidInstance("instance must be a JSON object");
  AdTypesInstance out;
  if (!node.contains("values")) throw InvalidInstance("instance is missing 'values'");
  out.values = money_list(node.at("values"), "values");
  out.bids = node.contains("bids") ? money_list(node.at("bids"), "bids") : out.values;

  std::vector<DiscountCurve> curves;
  if (node.contains("curves")) {
    for (const auto& c : node.at("curves")) curves.emplace_back(money_list(c, "curves"));
  } else if (node.contains("curve")) {
    curves.emplace_back(money_list(node.at("curve"), "curve"));
  } else {
    throw InvalidInstance("instance is missing 'curves'");
  }
  if (curves.size() == 1 && out.bids.size() > 1) curves.assign(out.bids.size(), curves.front());
  out.curves = std::move(curves);
  if (node.contains("quantum")) out.quantum = money_from_json(node.at("quantum"));
  out.validate();
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AdTypesInstance load_instance(const std::filesystem::path& path) {
  return ad_types_from_json(nlohmann::json::parse(read_text_file(path)));
}

bool has_common_curve(const AdTypesInstance& instance) {
  for (const auto& c : instance.curves) {
    if (!(c == instance.curves.front())) return false;
  }
  return true;
}

PositionInstance to_position(const AdTypesInstance& instance) {
  if (instance.curves.empty() || !has_common_curve(instance)) {
    throw InvalidInstance("position mechanisms need a single common discount curve");
  }
  return PositionInstance{instance.values, instance.bids, instance.curves.front()};
}

}  // namespace envyic
