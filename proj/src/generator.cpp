#include "envyic/generator.hpp"

#include <cmath>
#include <numbers>

#include "envyic/errors.hpp"
#include "envyic/instance_json.hpp"

namespace envyic::harness {

void GeneratorConfig::validate() const {
  if (!(sigma > 0)) throw InvalidInstance("sigma must be positive");
  if (n_bidders == 0 || n_slots == 0) throw InvalidInstance("need at least one bidder and one slot");
  if (curve_classes.empty()) throw InvalidInstance("need at least one curve class");
  for (const auto& r : curve_classes) {
    if (r <= 0 || r > 1) throw InvalidInstance("curve ratios must lie in (0, 1]");
  }
  if (quantum <= 0) throw InvalidInstance("quantum must be positive");
  if (misreport_divisor <= 0) throw InvalidInstance("misreport divisor must be positive");
}

GeneratorConfig config_from_json(const nlohmann::json& node) {
  GeneratorConfig cfg;
  if (node.contains("seed")) cfg.seed = node.at("seed").get<std::uint64_t>();
  if (node.contains("n_bidders")) cfg.n_bidders = node.at("n_bidders").get<std::size_t>();
  if (node.contains("n_slots")) cfg.n_slots = node.at("n_slots").get<std::size_t>();
  if (node.contains("mu")) cfg.mu = node.at("mu").get<double>();
  if (node.contains("sigma")) cfg.sigma = node.at("sigma").get<double>();
  if (node.contains("curve_classes")) {
    cfg.curve_classes.clear();
    for (const auto& r : node.at("curve_classes")) cfg.curve_classes.push_back(money_from_json(r));
  }
  if (node.contains("quantum")) cfg.quantum = money_from_json(node.at("quantum"));
  if (node.contains("misreport_divisor")) cfg.misreport_divisor = money_from_json(node.at("misreport_divisor"));
  cfg.validate();
  return cfg;
}

nlohmann::json to_json(const GeneratorConfig& cfg) {
  nlohmann::json out;
  out["seed"] = cfg.seed;
  out["n_bidders"] = cfg.n_bidders;
  out["n_slots"] = cfg.n_slots;
  out["mu"] = cfg.mu;
  out["sigma"] = cfg.sigma;
  auto classes = nlohmann::json::array();
  for (const auto& r : cfg.curve_classes) classes.push_back(money_to_json(r));
  out["curve_classes"] = classes;
  out["quantum"] = money_to_json(cfg.quantum);
  out["misreport_divisor"] = money_to_json(cfg.misreport_divisor);
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double Rng::uniform01() {
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::normal() {
  const double u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t Rng::below(std::size_t bound) {
  // Rejection sampling keeps the draw unbiased and implementation independent.
  const std::uint64_t limit = engine_.max() - engine_.max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

AdTypesInstance generate_instance(const GeneratorConfig& cfg, std::size_t index) {
  cfg.validate();
  Rng rng(splitmix64(cfg.seed + index));

  std::vector<DiscountCurve> classes;
  classes.reserve(cfg.curve_classes.size());
  for (const auto& r : cfg.curve_classes) classes.push_back(DiscountCurve::geometric(r, cfg.n_slots));

  AdTypesInstance out;
  out.quantum = cfg.quantum;
  for (std::size_t i = 0; i < cfg.n_bidders; ++i) {
    const double draw = std::exp(cfg.mu + cfg.sigma * rng.normal());
    Money value = quantize(draw, cfg.quantum);
    if (value < cfg.quantum) value = cfg.quantum;
    out.values.push_back(value);
    out.curves.push_back(classes[rng.below(classes.size())]);
  }
  for (const auto& v : out.values) out.bids.push_back(v / cfg.misreport_divisor);
  return out;
}

std::vector<AdTypesInstance> generate_instances(const GeneratorConfig& cfg, std::size_t count) {
  std::vector<AdTypesInstance> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(generate_instance(cfg, k));
  return out;
}

}  // namespace envyic::harness
