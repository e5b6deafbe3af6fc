#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tscbench {

// Outcome of one (classifier, dataset, resample) run.
struct ResultSet {
  std::string dataset;
  std::string classifier;
  std::uint64_t resample_id = 0;
  std::string timestamp;
  // Classifier metadata, key=value pairs joined by ','.
  std::string parameters;
  std::vector<std::size_t> train_class_counts;
  std::vector<int> true_labels;
  std::vector<int> predicted;
  Eigen::MatrixXd probabilities;
  double fit_ms = 0.0;
  double predict_ms = 0.0;

  std::size_t num_classes() const { return train_class_counts.size(); }
  std::size_t num_cases() const { return true_labels.size(); }
  // Throws on inconsistent lengths, labels out of range or rows not summing to 1.
  void validate() const;
};

// Equality ignoring timestamp and wall times.
bool same_outcome(const ResultSet& a, const ResultSet& b);

enum class Metric { Accuracy, BalancedAccuracy, Auroc, Nll };

const char* to_string(Metric metric);
Metric parse_metric(std::string_view text);
bool higher_is_better(Metric metric);

struct Metrics {
  double acc = 0.0;
  double bal_acc = 0.0;
  double auroc = 0.0;
  double nll = 0.0;

  double get(Metric metric) const;
};

double accuracy(std::span<const int> truth, std::span<const int> predicted);
// Mean recall over the classes present in `truth`.
double balanced_accuracy(std::span<const int> truth, std::span<const int> predicted, std::size_t num_classes);
// One-vs-rest AUROC weighted by train class frequency. With two classes only
// the train minority class is scored. Classes whose test set lacks positives
// or negatives are skipped; 0.5 if none remain.
double auroc(std::span<const int> truth, const Eigen::MatrixXd& probabilities,
             std::span<const std::size_t> train_class_counts);
// Binary AUROC of `scores` for positives vs the rest (ties count one half).
double binary_auroc(std::span<const double> scores, const std::vector<bool>& positive);
// Mean -ln p(true class), p clamped to [1e-16, 1].
double negative_log_likelihood(std::span<const int> truth, const Eigen::MatrixXd& probabilities);

Metrics metrics(const ResultSet& result);

enum class WilcoxonMethod { Auto, Exact, Normal };

// Two-sided signed-rank p-value for paired samples. Zero differences are
// dropped, tied magnitudes get average ranks. Auto is exact up to 25 pairs.
double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                            WilcoxonMethod method = WilcoxonMethod::Auto);
double wilcoxon_signed_rank(std::span<const double> differences, WilcoxonMethod method = WilcoxonMethod::Auto);

// Step-down Holm rejections, in input order.
std::vector<bool> holm_correction(std::span<const double> p_values, double alpha);

// Rank 1 is the best value; ties get the mean of the ranks they span.
std::vector<double> rank_values(std::span<const double> values, bool higher_is_better);

// values(i, j): mean metric of classifier i on dataset j.
struct ComparisonMatrix {
  std::vector<std::string> classifiers;
  std::vector<std::string> datasets;
  Eigen::MatrixXd values;
  bool higher_is_better = true;

  // Same shape as values.
  Eigen::MatrixXd ranks() const;
};

struct PairwiseTest {
  std::size_t first = 0;
  std::size_t second = 0;
  double p_value = 1.0;
  bool rejected = false;
};

struct RankSummary {
  std::vector<double> average_ranks;
  // Classifier indices sorted by average rank (stable).
  std::vector<std::size_t> order;
  std::vector<PairwiseTest> pairwise;
  // Each clique lists classifier indices in rank order.
  std::vector<std::vector<std::size_t>> cliques;
};

// What the pairwise Wilcoxon tests compare across datasets. Per-dataset ranks
// make the cliques invariant under order-preserving transforms of the metric.
enum class PairedOn { Ranks, Values };

const char* to_string(PairedOn paired);
PairedOn parse_paired_on(std::string_view text);

// Cliques are the maximal runs of the rank order that contain no
// Holm-rejected pair; a classifier in no larger run forms its own clique.
RankSummary ranks_and_cliques(const ComparisonMatrix& comparison, double alpha,
                              PairedOn paired = PairedOn::Ranks);

}  // namespace tscbench
