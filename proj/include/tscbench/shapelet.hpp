#pragma once

#include "tscbench/transform.hpp"

#include <span>
#include <vector>

namespace tscbench {

struct Shapelet {
  // Stored z-normalised when `normalise` is set.
  std::vector<double> values;
  std::size_t dilation = 1;
  bool normalise = false;
  // Occurrence threshold on squared distance.
  double threshold = 0.0;
  std::size_t source_series = 0;
  std::size_t source_offset = 0;

  std::size_t length() const { return values.size(); }
};

struct ShapeletMatch {
  double min_dist = 0.0;
  std::size_t argmin = 0;
  std::size_t count_below = 0;
};

// Mean and population std of every dilated window of one length/dilation.
struct WindowStats {
  std::vector<double> mean;
  std::vector<double> stdev;
};
WindowStats window_stats(std::span<const double> series, std::size_t length, std::size_t dilation);

// Squared Euclidean distance to every dilated window (each z-normalised when
// the shapelet is): minimum, first offset reaching it, and the number of
// windows strictly below the threshold.
ShapeletMatch sdist(const Shapelet& shapelet, std::span<const double> series);
// Same result using precomputed statistics for the shapelet's (length, dilation).
ShapeletMatch sdist(const Shapelet& shapelet, std::span<const double> series, const WindowStats& stats);

struct ShapeletOptions {
  std::size_t length = 11;
  double normalise_probability = 0.8;
  double threshold_low_percentile = 0.05;
  double threshold_high_percentile = 0.10;
};

std::vector<Shapelet> sample_shapelets(const Dataset& train, std::size_t count, Rng& rng,
                                       const ShapeletOptions& options = {});

// Random dilated shapelets; features (min distance, argmin, occurrences) per shapelet.
class RdstTransform final : public FeatureTransform {
 public:
  explicit RdstTransform(std::size_t num_shapelets = 10000, ShapeletOptions options = {})
      : num_shapelets_(num_shapelets), options_(options) {}

  void fit(const Dataset& train, Rng& rng) override;
  Eigen::MatrixXd transform(const SeriesMatrix& series) const override;
  std::size_t num_features() const override { return 3 * shapelets_.size(); }
  std::string metadata() const override;

  const std::vector<Shapelet>& shapelets() const { return shapelets_; }

 private:
  std::size_t num_shapelets_;
  ShapeletOptions options_;
  std::size_t series_length_ = 0;
  std::vector<Shapelet> shapelets_;
  // Shapelet indices grouped by dilation so window statistics are shared.
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> by_dilation_;
};

}  // namespace tscbench
