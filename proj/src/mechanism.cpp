#include "envyic/mechanism.hpp"

#include <stdexcept>

#include "envyic/errors.hpp"
#include "envyic/instance_json.hpp"

namespace envyic {

Outcome RegularMechanism::run(const AdTypesInstance& instance) const {
  if (!has_common_curve(instance)) throw InvalidInstance(name() + " needs a common discount curve");
  return position::run_regular(instance.bids, instance.curves.front(), kind_);
}

Outcome ExtendedGspMechanism::run(const AdTypesInstance& instance) const {
  return adtypes::extended_gsp_outcome(instance).outcome;
}

Outcome MatchingVcgMechanism::run(const AdTypesInstance& instance) const {
  return adtypes::vcg_outcome(instance);
}

std::string GreedyMechanism::name() const {
  return rule_ == adtypes::GreedyRule::Gsp ? "greedy-gsp" : "greedy-externality";
}

Outcome GreedyMechanism::run(const AdTypesInstance& instance) const {
  return adtypes::greedy_outcome(instance, rule_);
}

std::unique_ptr<Mechanism> make_mechanism(std::string_view tag) {
  if (tag == "vcg") return std::make_unique<MatchingVcgMechanism>();
  if (tag == "gsp" || tag == "gfp") return std::make_unique<RegularMechanism>(position::parse_kind(tag));
  if (tag == "extended-gsp") return std::make_unique<ExtendedGspMechanism>();
  if (tag == "greedy-gsp") return std::make_unique<GreedyMechanism>(adtypes::GreedyRule::Gsp);
  if (tag == "greedy-externality") return std::make_unique<GreedyMechanism>(adtypes::GreedyRule::Externality);
  throw std::invalid_argument("unknown mechanism '" + std::string(tag) + "'");
}

std::unique_ptr<Mechanism> make_mechanism(std::string_view tag, const AdTypesInstance& instance) {
  const bool common = has_common_curve(instance);
  if (tag == "vcg" && common) return std::make_unique<RegularMechanism>(position::MechanismKind::vcg());
  if ((tag == "gsp" || tag == "gfp") && !common) {
    throw InvalidInstance(std::string(tag) + " needs a common discount curve; try extended-gsp");
  }
  return make_mechanism(tag);
}

}  // namespace envyic
