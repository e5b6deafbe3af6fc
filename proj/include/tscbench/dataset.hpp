#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tscbench {

// Row i holds series i; rows are contiguous.
using SeriesMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Labelled collection of equal-length univariate series.
struct Dataset {
  std::string name;
  SeriesMatrix series;
  std::vector<int> labels;
  std::vector<std::string> class_names;

  std::size_t n_cases() const { return static_cast<std::size_t>(series.rows()); }
  std::size_t series_length() const { return static_cast<std::size_t>(series.cols()); }
  std::size_t num_classes() const { return class_names.size(); }

  std::span<const double> row(std::size_t i) const {
    return {series.data() + i * series_length(), series_length()};
  }

  // Per-class case counts, indexed by label.
  std::vector<std::size_t> class_counts() const;

  // Copy of the cases [first, last).
  Dataset slice(std::size_t first, std::size_t last) const;

  // Throws Error if any Dataset invariant is broken.
  void validate() const;

  bool operator==(const Dataset& other) const;
};

struct ResamplePlan {
  std::uint64_t resample_id = 0;
  std::uint64_t experiment_seed = 0;
};

std::uint64_t fnv1a(std::string_view text);

// 64-bit mix of (experiment seed, dataset name hash, resample id).
std::uint64_t task_seed(std::uint64_t experiment_seed, std::string_view dataset_name,
                        std::uint64_t resample_id);

// Parses the archive `.ts` format. Unknown directives are skipped and
// reported through `warnings` when it is non-null.
Dataset parse_ts(std::istream& in, std::vector<std::string>* warnings = nullptr);
Dataset parse_ts(std::string_view text, std::vector<std::string>* warnings = nullptr);
Dataset load_ts(const std::string& path, std::vector<std::string>* warnings = nullptr);

std::string write_ts(const Dataset& dataset);

// Re-splits the pooled cases keeping each split's size and per-class counts.
// Resample 0 returns the inputs unchanged.
std::pair<Dataset, Dataset> stratified_resample(const Dataset& train, const Dataset& test,
                                                const ResamplePlan& plan);

}  // namespace tscbench
