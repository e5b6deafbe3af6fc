#pragma once

#include "tscbench/dataset.hpp"
#include "tscbench/rng.hpp"

#include <Eigen/Dense>

#include <string>

namespace tscbench {

// Unsupervised series-to-features map fitted on training data.
class FeatureTransform {
 public:
  virtual ~FeatureTransform() = default;

  virtual void fit(const Dataset& train, Rng& rng) = 0;
  // One output row per input series.
  virtual Eigen::MatrixXd transform(const SeriesMatrix& series) const = 0;
  virtual std::size_t num_features() const = 0;
  // key=value pairs joined by ','; values never contain commas.
  virtual std::string metadata() const = 0;

  Eigen::MatrixXd fit_transform(const Dataset& train, Rng& rng) {
    fit(train, rng);
    return transform(train.series);
  }
};

}  // namespace tscbench
