#include "tscbench/eval_stats.hpp"

#include "tscbench/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tscbench {

namespace {

// Average 1-based ranks of `values` in ascending order.
std::vector<double> ascending_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

void check_labels(std::span<const int> labels, std::size_t num_classes, const char* what) {
  for (int l : labels) {
    if (l < 0 || static_cast<std::size_t>(l) >= num_classes) {
      throw Error(ErrorCode::UnknownLabel, std::string(what) + " label " + std::to_string(l) + " out of range");
    }
  }
}

}  // namespace

void ResultSet::validate() const {
  const std::size_t c = num_classes();
  if (c == 0) throw Error(ErrorCode::InvalidArgument, "result has no classes");
  if (predicted.size() != true_labels.size() || static_cast<std::size_t>(probabilities.rows()) != true_labels.size() ||
      static_cast<std::size_t>(probabilities.cols()) != c) {
    throw Error(ErrorCode::DimensionMismatch, "result lengths are inconsistent");
  }
  check_labels(true_labels, c, "true");
  check_labels(predicted, c, "predicted");
  for (Eigen::Index i = 0; i < probabilities.rows(); ++i) {
    if (std::abs(probabilities.row(i).sum() - 1.0) > 1e-6 || probabilities.row(i).minCoeff() < 0.0) {
      throw Error(ErrorCode::BadValue, "probability row " + std::to_string(i) + " is not a distribution");
    }
  }
}

bool same_outcome(const ResultSet& a, const ResultSet& b) {
  return a.dataset == b.dataset && a.classifier == b.classifier && a.resample_id == b.resample_id &&
         a.parameters == b.parameters && a.train_class_counts == b.train_class_counts &&
         a.true_labels == b.true_labels && a.predicted == b.predicted &&
         a.probabilities.rows() == b.probabilities.rows() && a.probabilities.cols() == b.probabilities.cols() &&
         a.probabilities == b.probabilities;
}

const char* to_string(Metric metric) {
  switch (metric) {
    case Metric::Accuracy: return "acc";
    case Metric::BalancedAccuracy: return "balacc";
    case Metric::Auroc: return "auroc";
    case Metric::Nll: return "nll";
  }
  return "?";
}

Metric parse_metric(std::string_view text) {
  for (Metric m : {Metric::Accuracy, Metric::BalancedAccuracy, Metric::Auroc, Metric::Nll}) {
    if (text == to_string(m)) return m;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown metric '" + std::string(text) + "'; expected acc, balacc, auroc or nll");
}

bool higher_is_better(Metric metric) { return metric != Metric::Nll; }

double Metrics::get(Metric metric) const {
  switch (metric) {
    case Metric::Accuracy: return acc;
    case Metric::BalancedAccuracy: return bal_acc;
    case Metric::Auroc: return auroc;
    case Metric::Nll: return nll;
  }
  return acc;
}

double accuracy(std::span<const int> truth, std::span<const int> predicted) {
  if (truth.size() != predicted.size() || truth.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "accuracy needs equal, non-empty label lists");
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) correct += truth[i] == predicted[i];
  return static_cast<double>(correct) / static_cast<double>(truth.size());
}

double balanced_accuracy(std::span<const int> truth, std::span<const int> predicted, std::size_t num_classes) {
  if (truth.size() != predicted.size() || truth.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "balanced accuracy needs equal, non-empty label lists");
  }
  check_labels(truth, num_classes, "true");
  std::vector<std::size_t> total(num_classes, 0), hit(num_classes, 0);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const auto c = static_cast<std::size_t>(truth[i]);
    ++total[c];
    hit[c] += truth[i] == predicted[i];
  }
  double sum = 0.0;
  std::size_t present = 0;
  for (std::size_t c = 0; c < num_classes; ++c) {
    if (total[c] == 0) continue;
    sum += static_cast<double>(hit[c]) / static_cast<double>(total[c]);
    ++present;
  }
  return sum / static_cast<double>(present);
}

double binary_auroc(std::span<const double> scores, const std::vector<bool>& positive) {
  const auto ranks = ascending_ranks(scores);
  double pos_rank_sum = 0.0;
  std::size_t p = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (positive[i]) {
      pos_rank_sum += ranks[i];
      ++p;
    }
  }
  const std::size_t q = scores.size() - p;
  if (p == 0 || q == 0) throw Error(ErrorCode::InvalidArgument, "AUROC needs positives and negatives");
  const auto pd = static_cast<double>(p);
  return (pos_rank_sum - pd * (pd + 1.0) / 2.0) / (pd * static_cast<double>(q));
}

double auroc(std::span<const int> truth, const Eigen::MatrixXd& probabilities,
             std::span<const std::size_t> train_class_counts) {
  const std::size_t c = train_class_counts.size();
  if (static_cast<std::size_t>(probabilities.cols()) != c ||
      static_cast<std::size_t>(probabilities.rows()) != truth.size()) {
    throw Error(ErrorCode::DimensionMismatch, "AUROC inputs disagree in shape");
  }
  check_labels(truth, c, "true");
  for (int l : truth) {
    if (train_class_counts[static_cast<std::size_t>(l)] == 0) {
      throw Error(ErrorCode::ClassMismatch, "test class " + std::to_string(l) + " never seen in training");
    }
  }
  std::vector<std::size_t> classes;
  if (c == 2) {
    classes.push_back(train_class_counts[1] < train_class_counts[0] ? 1 : 0);
  } else {
    for (std::size_t k = 0; k < c; ++k) classes.push_back(k);
  }
  double weighted = 0.0, weight = 0.0;
  std::vector<double> scores(truth.size());
  std::vector<bool> positive(truth.size());
  for (std::size_t k : classes) {
    std::size_t p = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      scores[i] = probabilities(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
      positive[i] = static_cast<std::size_t>(truth[i]) == k;
      p += positive[i];
    }
    if (p == 0 || p == truth.size() || train_class_counts[k] == 0) continue;
    const auto w = static_cast<double>(train_class_counts[k]);
    weighted += w * binary_auroc(scores, positive);
    weight += w;
  }
  return weight == 0.0 ? 0.5 : weighted / weight;
}

double negative_log_likelihood(std::span<const int> truth, const Eigen::MatrixXd& probabilities) {
  if (static_cast<std::size_t>(probabilities.rows()) != truth.size() || truth.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "NLL inputs disagree in shape");
  }
  check_labels(truth, static_cast<std::size_t>(probabilities.cols()), "true");
  double sum = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double p = std::clamp(probabilities(static_cast<Eigen::Index>(i), truth[i]), 1e-16, 1.0);
    sum -= std::log(p);
  }
  return sum / static_cast<double>(truth.size());
}

Metrics metrics(const ResultSet& result) {
  result.validate();
  Metrics m;
  m.acc = accuracy(result.true_labels, result.predicted);
  m.bal_acc = balanced_accuracy(result.true_labels, result.predicted, result.num_classes());
  m.auroc = auroc(result.true_labels, result.probabilities, result.train_class_counts);
  m.nll = negative_log_likelihood(result.true_labels, result.probabilities);
  return m;
}

double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b, WilcoxonMethod method) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "Wilcoxon needs paired samples");
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return wilcoxon_signed_rank(d, method);
}

double wilcoxon_signed_rank(std::span<const double> differences, WilcoxonMethod method) {
  std::vector<double> magnitude;
  std::vector<bool> positive;
  for (double d : differences) {
    if (d == 0.0) continue;
    magnitude.push_back(std::abs(d));
    positive.push_back(d > 0.0);
  }
  const std::size_t n = magnitude.size();
  if (n == 0) return 1.0;
  const auto ranks = ascending_ranks(magnitude);
  double w_plus = 0.0;
  for (std::size_t i = 0; i < n; ++i) w_plus += positive[i] ? ranks[i] : 0.0;

  if (method == WilcoxonMethod::Exact || (method == WilcoxonMethod::Auto && n <= 25)) {
    // Average ranks are multiples of 1/2, so doubled ranks are integers.
    std::vector<std::size_t> doubled(n);
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      doubled[i] = static_cast<std::size_t>(std::lround(2.0 * ranks[i]));
      total += doubled[i];
    }
    std::vector<double> ways(total + 1, 0.0);
    ways[0] = 1.0;
    std::size_t reach = 0;
    for (std::size_t r : doubled) {
      reach += r;
      for (std::size_t s = reach; s >= r; --s) {
        ways[s] += ways[s - r];
        if (s == r) break;
      }
    }
    const auto observed = static_cast<std::size_t>(std::lround(2.0 * w_plus));
    double below = 0.0, above = 0.0, all = 0.0;
    for (std::size_t s = 0; s <= total; ++s) {
      all += ways[s];
      if (s <= observed) below += ways[s];
      if (s >= observed) above += ways[s];
    }
    return std::min(1.0, 2.0 * std::min(below, above) / all);
  }

  const auto nd = static_cast<double>(n);
  const double mean = nd * (nd + 1.0) / 4.0;
  double tie_term = 0.0;
  {
    std::vector<double> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && sorted[j] == sorted[i]) ++j;
      const auto t = static_cast<double>(j - i);
      tie_term += t * t * t - t;
      i = j;
    }
  }
  const double variance = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0 - tie_term / 48.0;
  if (variance <= 0.0) return 1.0;
  const double z = std::max(0.0, std::abs(w_plus - mean) - 0.5) / std::sqrt(variance);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

std::vector<bool> holm_correction(std::span<const double> p_values, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");
  const std::size_t m = p_values.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });
  std::vector<bool> reject(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(p_values[order[i]] <= alpha / static_cast<double>(m - i))) break;
    reject[order[i]] = true;
  }
  return reject;
}

std::vector<double> rank_values(std::span<const double> values, bool higher_is_better) {
  if (!higher_is_better) return ascending_ranks(values);
  std::vector<double> negated(values.size());
  std::transform(values.begin(), values.end(), negated.begin(), [](double v) { return -v; });
  return ascending_ranks(negated);
}

Eigen::MatrixXd ComparisonMatrix::ranks() const {
  Eigen::MatrixXd out(values.rows(), values.cols());
  std::vector<double> column(static_cast<std::size_t>(values.rows()));
  for (Eigen::Index j = 0; j < values.cols(); ++j) {
    for (Eigen::Index i = 0; i < values.rows(); ++i) column[static_cast<std::size_t>(i)] = values(i, j);
    const auto r = rank_values(column, higher_is_better);
    for (Eigen::Index i = 0; i < values.rows(); ++i) out(i, j) = r[static_cast<std::size_t>(i)];
  }
  return out;
}

const char* to_string(PairedOn paired) { return paired == PairedOn::Ranks ? "ranks" : "values"; }

PairedOn parse_paired_on(std::string_view text) {
  if (text == "ranks") return PairedOn::Ranks;
  if (text == "values") return PairedOn::Values;
  throw Error(ErrorCode::InvalidArgument, "unknown pairing '" + std::string(text) + "' (expected ranks or values)");
}

RankSummary ranks_and_cliques(const ComparisonMatrix& comparison, double alpha, PairedOn paired) {
  const auto k = static_cast<std::size_t>(comparison.values.rows());
  const auto d = static_cast<std::size_t>(comparison.values.cols());
  if (k < 2 || d < 2) throw Error(ErrorCode::InvalidArgument, "need at least two classifiers and two datasets");
  if (comparison.classifiers.size() != k || comparison.datasets.size() != d) {
    throw Error(ErrorCode::DimensionMismatch, "comparison labels do not match the value matrix");
  }
  RankSummary summary;
  const Eigen::MatrixXd ranks = comparison.ranks();
  const Eigen::MatrixXd& tested = paired == PairedOn::Ranks ? ranks : comparison.values;
  const Eigen::VectorXd avg = ranks.rowwise().mean();
  summary.average_ranks.assign(avg.data(), avg.data() + avg.size());
  summary.order.resize(k);
  std::iota(summary.order.begin(), summary.order.end(), 0);
  std::stable_sort(summary.order.begin(), summary.order.end(), [&](std::size_t a, std::size_t b) {
    return summary.average_ranks[a] < summary.average_ranks[b];
  });

  std::vector<double> p;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const Eigen::VectorXd x = tested.row(static_cast<Eigen::Index>(a)).transpose();
      const Eigen::VectorXd y = tested.row(static_cast<Eigen::Index>(b)).transpose();
      PairwiseTest t;
      t.first = a;
      t.second = b;
      t.p_value = wilcoxon_signed_rank(std::span<const double>(x.data(), d), std::span<const double>(y.data(), d));
      summary.pairwise.push_back(t);
      p.push_back(t.p_value);
    }
  }
  const auto reject = holm_correction(p, alpha);
  std::vector<std::vector<bool>> rejected(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < summary.pairwise.size(); ++i) {
    auto& t = summary.pairwise[i];
    t.rejected = reject[i];
    rejected[t.first][t.second] = rejected[t.second][t.first] = reject[i];
  }

  std::size_t previous_end = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t end = i;
    while (end + 1 < k) {
      bool clash = false;
      for (std::size_t s = i; s <= end && !clash; ++s) clash = rejected[summary.order[s]][summary.order[end + 1]];
      if (clash) break;
      ++end;
    }
    if (i == 0 || end > previous_end) {
      summary.cliques.emplace_back(summary.order.begin() + static_cast<std::ptrdiff_t>(i),
                                   summary.order.begin() + static_cast<std::ptrdiff_t>(end + 1));
    }
    previous_end = std::max(previous_end, end);
  }
  return summary;
}

}  // namespace tscbench
