#pragma once

#include <stdexcept>

namespace envyic {

/// Slot or bidder index outside the instance.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Matrix or vector shapes that do not line up.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that violates a type invariant (negative bid, increasing curve, ...).
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Data for which a statistic is undefined (e.g. R^2 on constant labels).
class DegenerateData : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace envyic
