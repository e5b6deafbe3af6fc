#pragma once

#include "tscbench/dataset.hpp"

#include <functional>
#include <span>
#include <vector>

namespace tscbench {

// Full-window DTW with squared pointwise cost and no final root.
double dtw_distance(std::span<const double> a, std::span<const double> b);

double squared_euclidean(std::span<const double> a, std::span<const double> b);

using DistanceFn = std::function<double(std::span<const double>, std::span<const double>)>;

struct Nn1Model {
  SeriesMatrix train;
  std::vector<int> labels;
  std::size_t num_classes = 0;
};

struct Nn1Prediction {
  int label = 0;
  std::vector<double> probabilities;
};

Nn1Model nn1_fit(const Dataset& train);

// Nearest training case wins; ties go to the lowest training index.
Nn1Prediction nn1_classify(const Nn1Model& model, std::span<const double> query,
                           const DistanceFn& distance = dtw_distance);

}  // namespace tscbench
