#include "envyic/regression.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "envyic/errors.hpp"

namespace envyic::harness {

namespace {

constexpr double kRidge = 1e-9;
constexpr std::size_t kMinRows = 100;

double r_squared(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, const Eigen::VectorXd& beta) {
  const double mean = y.mean();
  const double ss_tot = (y.array() - mean).square().sum();
  if (ss_tot == 0) throw DegenerateData("R^2 undefined: constant labels in a split");
  const double ss_res = (y - x * beta).squaredNorm();
  return 1.0 - ss_res / ss_tot;
}

}  // namespace

FitResult ols_fit_eval(const std::vector<std::vector<double>>& features, const std::vector<double>& labels,
                       std::uint64_t split_seed) {
  if (features.size() != labels.size()) throw DimensionError("feature and label counts differ");
  if (labels.size() < kMinRows) throw DegenerateData("need at least 100 rows for a train/test split");
  if (std::set<double>(labels.begin(), labels.end()).size() < 2) {
    throw DegenerateData("R^2 undefined: fewer than 2 distinct labels");
  }
  const std::size_t n = labels.size();
  const std::size_t d = features.front().size() + 1;
  for (const auto& row : features) {
    if (row.size() + 1 != d) throw DimensionError("ragged feature rows");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(split_seed);
  // Fisher-Yates with explicit draws so the split does not depend on the
  // standard library's shuffle.
  for (std::size_t k = n; k > 1; --k) std::swap(order[k - 1], order[rng() % k]);
  const std::size_t n_train = n * 4 / 5;

  auto fill = [&](std::size_t from, std::size_t to, Eigen::MatrixXd& x, Eigen::VectorXd& y) {
    x.resize(static_cast<Eigen::Index>(to - from), static_cast<Eigen::Index>(d));
    y.resize(static_cast<Eigen::Index>(to - from));
    for (std::size_t r = from; r < to; ++r) {
      const auto row = static_cast<Eigen::Index>(r - from);
      x(row, 0) = 1.0;
      const auto& f = features[order[r]];
      for (std::size_t c = 0; c + 1 < d; ++c) x(row, static_cast<Eigen::Index>(c + 1)) = f[c];
      y(row) = labels[order[r]];
    }
  };
  Eigen::MatrixXd x_train, x_test;
  Eigen::VectorXd y_train, y_test;
  fill(0, n_train, x_train, y_train);
  fill(n_train, n, x_test, y_test);

  Eigen::MatrixXd gram = x_train.transpose() * x_train;
  gram.diagonal().array() += kRidge;
  const Eigen::VectorXd beta = gram.ldlt().solve(x_train.transpose() * y_train);

  FitResult out;
  out.r2_train = r_squared(x_train, y_train, beta);
  out.r2_test = r_squared(x_test, y_test, beta);
  out.coefficients.assign(beta.data(), beta.data() + beta.size());
  out.train_rows = n_train;
  out.test_rows = n - n_train;
  return out;
}

FeatureSet parse_feature_set(std::string_view tag) {
  if (tag == "envy") return FeatureSet::Envy;
  if (tag == "price-value") return FeatureSet::PriceValue;
  throw std::invalid_argument("unknown feature set: " + std::string(tag));
}

FitResult ols_fit_eval(const CsvTable& dataset, FeatureSet features, std::uint64_t split_seed) {
  std::vector<std::size_t> picked;
  for (std::size_t c = 0; c < dataset.columns.size(); ++c) {
    const auto& name = dataset.columns[c];
    const bool envy = name.starts_with("envy_");
    const bool price_value = name.starts_with("value_") || name.starts_with("price_");
    if ((features == FeatureSet::Envy && envy) || (features == FeatureSet::PriceValue && price_value)) {
      picked.push_back(c);
    }
  }
  if (picked.empty()) throw DimensionError("dataset has no columns for the requested features");
  const std::size_t label = dataset.column("label_regret");

  std::vector<std::vector<double>> x;
  std::vector<double> y;
  x.reserve(dataset.rows.size());
  y.reserve(dataset.rows.size());
  for (const auto& row : dataset.rows) {
    std::vector<double> f;
    f.reserve(picked.size());
    for (auto c : picked) f.push_back(row[c]);
    x.push_back(std::move(f));
    y.push_back(row[label]);
  }
  return ols_fit_eval(x, y, split_seed);
}

}  // namespace envyic::harness
