#include "tscbench/dtw.hpp"

#include "tscbench/error.hpp"

#include <algorithm>
#include <limits>

namespace tscbench {

double dtw_distance(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::InvalidArgument, "dtw of an empty series");
  constexpr double inf = std::numeric_limits<double>::infinity();
  const std::size_t cols = b.size();
  // Two rolling rows of the cumulative cost matrix, with a leading sentinel column.
  std::vector<double> prev(cols + 1, inf), curr(cols + 1, inf);
  prev[0] = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    curr[0] = inf;
    for (std::size_t j = 0; j < cols; ++j) {
      const double diff = a[i] - b[j];
      const double best = std::min({prev[j], prev[j + 1], curr[j]});
      curr[j + 1] = diff * diff + best;
    }
    std::swap(prev, curr);
    prev[0] = inf;
  }
  return prev[cols];
}

double squared_euclidean(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "euclidean distance of unequal lengths");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

Nn1Model nn1_fit(const Dataset& train) {
  train.validate();
  return {train.series, train.labels, train.num_classes()};
}

Nn1Prediction nn1_classify(const Nn1Model& model, std::span<const double> query, const DistanceFn& distance) {
  if (model.labels.empty()) throw Error(ErrorCode::InvalidArgument, "1NN model has no training cases");
  if (query.empty()) throw Error(ErrorCode::InvalidArgument, "empty query");
  const auto n = static_cast<std::size_t>(model.train.cols());
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < model.labels.size(); ++i) {
    const double d = distance(std::span<const double>(model.train.data() + i * n, n), query);
    if (d < best) {
      best = d;
      best_index = i;
    }
  }
  Nn1Prediction out;
  out.label = model.labels[best_index];
  out.probabilities.assign(model.num_classes, 0.0);
  out.probabilities[static_cast<std::size_t>(out.label)] = 1.0;
  return out;
}

}  // namespace tscbench
