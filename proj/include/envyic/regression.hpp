#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "envyic/csv.hpp"

namespace envyic::harness {

struct FitResult {
  double r2_train = 0;
  double r2_test = 0;
  std::vector<double> coefficients;  // intercept first
  std::size_t train_rows = 0;
  std::size_t test_rows = 0;
};

/// Least squares with an intercept, solved from the normal equations with
/// 1e-9 ridge damping. Rows are shuffled with split_seed; the first 80% train.
/// Throws DegenerateData with fewer than 2 distinct labels, or when a split
/// has constant labels (R^2 undefined), or with fewer than 100 rows.
/// DimensionError on ragged input.
FitResult ols_fit_eval(const std::vector<std::vector<double>>& features, const std::vector<double>& labels,
                       std::uint64_t split_seed);

enum class FeatureSet { Envy, PriceValue };
FeatureSet parse_feature_set(std::string_view tag);

/// Picks envy_* or value_*/price_* columns and label_regret from a dataset CSV.
FitResult ols_fit_eval(const CsvTable& dataset, FeatureSet features, std::uint64_t split_seed);

}  // namespace envyic::harness
