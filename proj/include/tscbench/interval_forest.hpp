#pragma once

#include "tscbench/dataset.hpp"
#include "tscbench/rng.hpp"

#include <Eigen/Dense>

#include <array>
#include <span>
#include <string>
#include <vector>

namespace tscbench {

enum class Representation { Base, Periodogram, Difference };

enum class IntervalStat { Mean, Variance, Slope, Median, Iqr, Min, Max };

inline constexpr std::array<IntervalStat, 7> kIntervalCatalogue{
    IntervalStat::Mean, IntervalStat::Variance, IntervalStat::Slope, IntervalStat::Median,
    IntervalStat::Iqr,  IntervalStat::Min,      IntervalStat::Max};

const char* to_string(IntervalStat stat);

struct IntervalSpec {
  Representation representation = Representation::Base;
  std::size_t offset = 0;
  std::size_t length = 0;
};

// Length of a representation of a series of length n.
std::size_t representation_length(Representation rep, std::size_t n);

// The three representations of one series, indexed by Representation.
struct SeriesViews {
  std::array<std::vector<double>, 3> values;

  explicit SeriesViews(std::span<const double> series);
  std::span<const double> operator[](Representation rep) const {
    return values[static_cast<std::size_t>(rep)];
  }
};

// Summary statistics of values[offset, offset + length). Variance is the
// sample (n-1) variance; slope is the least-squares slope against 0..len-1;
// quartiles use linear interpolation.
std::vector<double> interval_features(std::span<const double> values, std::size_t offset, std::size_t length,
                                      std::span<const IntervalStat> stats);
std::vector<double> interval_features(const SeriesViews& views, const IntervalSpec& interval,
                                      std::span<const IntervalStat> stats);

// Entropy-split classification tree considering every attribute at every
// node; exact information-gain ties go to the larger margin (distance from
// the threshold to the nearest training value). Grows until leaves are pure,
// hold at most two cases, or no attribute varies.
class DecisionTree {
 public:
  void fit(const Eigen::MatrixXd& features, std::span<const int> labels, std::size_t num_classes);
  int predict(std::span<const double> row) const;
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t depth() const;

 private:
  struct Node {
    int feature = -1;  // -1 for leaves
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    int label = 0;
  };

  int build(const Eigen::MatrixXd& x, std::span<const int> y, std::vector<std::size_t>& idx, std::size_t depth);

  std::size_t num_classes_ = 0;
  std::vector<Node> nodes_;
};

struct IntervalTree {
  DecisionTree tree;
  std::vector<IntervalSpec> intervals;
  std::vector<IntervalStat> stats;

  // Feature vector laid out interval-major, stat-minor.
  std::vector<double> features(const SeriesViews& views) const;
};

struct IntervalForestOptions {
  enum class Variant { Tsf, DrCif };
  Variant variant = Variant::DrCif;
  std::size_t num_trees = 200;
  // Attribute subset size per DrCIF tree.
  std::size_t attributes = 4;
};

// Number of DrCIF intervals for a representation of length r: ceil((4 + sqrt(r)) / 3).
std::size_t drcif_interval_count(std::size_t r);

class IntervalForest {
 public:
  explicit IntervalForest(IntervalForestOptions options = {}) : options_(options) {}

  void fit(const Dataset& train, Rng& rng);
  // Per-class vote counts for each series.
  Eigen::MatrixXd votes(const SeriesMatrix& series) const;
  // Vote fractions.
  Eigen::MatrixXd predict_proba(const SeriesMatrix& series) const;

  const std::vector<IntervalTree>& trees() const { return trees_; }
  const IntervalForestOptions& options() const { return options_; }
  std::string metadata() const;

 private:
  IntervalForestOptions options_;
  std::size_t series_length_ = 0;
  std::size_t num_classes_ = 0;
  std::vector<IntervalTree> trees_;
};

}  // namespace tscbench
