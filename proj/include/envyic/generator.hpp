#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "envyic/types.hpp"

namespace envyic::harness {

/// Recorded in CSV headers so datasets can be regenerated elsewhere: each
/// instance k seeds its own mt19937_64 with splitmix64(seed + k), normals come
/// from Box-Muller on 53-bit uniforms.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/splitmix64-per-instance/box-muller";

struct GeneratorConfig {
  std::uint64_t seed = 42;
  std::size_t n_bidders = 6;
  std::size_t n_slots = 5;
  double mu = 0.0;     // lognormal location
  double sigma = 1.0;  // lognormal scale, > 0
  std::vector<Money> curve_classes{Money(9, 10), Money(7, 10), Money(1, 2)};  // geometric ratios
  Money quantum{1, 100};
  Money misreport_divisor{1};  // bids = values / k; 1 means truthful

  void validate() const;
};

GeneratorConfig config_from_json(const nlohmann::json& node);
nlohmann::json to_json(const GeneratorConfig& cfg);

std::uint64_t splitmix64(std::uint64_t x);

/// Portable draws; std::*_distribution output differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform01();  // (0, 1]
  double normal();
  std::size_t below(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

AdTypesInstance generate_instance(const GeneratorConfig& cfg, std::size_t index);
std::vector<AdTypesInstance> generate_instances(const GeneratorConfig& cfg, std::size_t count);

}  // namespace envyic::harness
