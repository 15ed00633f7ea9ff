#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace envyic {

/// Exact currency amount. All auction arithmetic is done in rationals; doubles
/// only appear when writing CSV.
using Money = mpq_class;

/// Parses "12", "-0.25", "1e-3" style decimals or "num/den" rationals.
/// Throws std::invalid_argument on malformed input.
Money parse_money(std::string_view text);

/// Exact decimal if the denominator is of the form 2^a 5^b, "num/den" otherwise.
/// parse_money(to_string(x)) == x for every x.
std::string to_string(const Money& value);

/// Rounded fixed-point rendering (half away from zero), e.g. for CSV output.
std::string to_fixed(const Money& value, int digits);

double to_double(const Money& value);

/// Nearest multiple of `step` (> 0). Exact halves round toward -infinity.
Money round_to_multiple(const Money& value, const Money& step);

/// Largest multiple of `step` that is <= value.
Money floor_to_multiple(const Money& value, const Money& step);

/// Smallest multiple of `step` that is >= value.
Money ceil_to_multiple(const Money& value, const Money& step);

/// Exact conversion of a double already known to sit on the grid `step`,
/// e.g. a sampled bid: returns round(x / step) * step.
Money quantize(double x, const Money& step);

/// Largest g > 0 such that every value is an integer multiple of g.
/// Returns 1 when all values are zero.
Money rational_gcd(std::span<const Money> values);

Money max_of(std::span<const Money> values);
Money sum_of(std::span<const Money> values);

}  // namespace envyic
