#include "tscbench/interval_forest.hpp"

#include "tscbench/error.hpp"
#include "tscbench/parallel.hpp"
#include "tscbench/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tscbench {

namespace {

double entropy(const std::vector<std::size_t>& counts, std::size_t total) {
  if (total == 0) return 0.0;
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

double quantile_sorted(const std::vector<double>& v, double q) {
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (v[hi] - v[lo]) * (pos - static_cast<double>(lo));
}

constexpr double kGainTieTolerance = 1e-12;

}  // namespace

const char* to_string(IntervalStat stat) {
  switch (stat) {
    case IntervalStat::Mean: return "mean";
    case IntervalStat::Variance: return "variance";
    case IntervalStat::Slope: return "slope";
    case IntervalStat::Median: return "median";
    case IntervalStat::Iqr: return "iqr";
    case IntervalStat::Min: return "min";
    case IntervalStat::Max: return "max";
  }
  return "?";
}

std::size_t representation_length(Representation rep, std::size_t n) {
  switch (rep) {
    case Representation::Base: return n;
    case Representation::Periodogram: return n / 2;
    case Representation::Difference: return n - 1;
  }
  return n;
}

SeriesViews::SeriesViews(std::span<const double> series) {
  values[0].assign(series.begin(), series.end());
  values[1] = periodogram(series);
  values[2] = first_difference(series);
}

std::vector<double> interval_features(std::span<const double> values, std::size_t offset, std::size_t length,
                                      std::span<const IntervalStat> stats) {
  if (length == 0 || offset + length > values.size()) {
    throw Error(ErrorCode::InvalidArgument, "interval outside the series");
  }
  const auto x = values.subspan(offset, length);
  const auto len = static_cast<double>(length);
  const double mu = std::accumulate(x.begin(), x.end(), 0.0) / len;
  std::vector<double> sorted;
  std::vector<double> out;
  out.reserve(stats.size());
  for (IntervalStat stat : stats) {
    switch (stat) {
      case IntervalStat::Mean:
        out.push_back(mu);
        break;
      case IntervalStat::Variance: {
        if (length < 2) throw Error(ErrorCode::InvalidArgument, "variance needs an interval of length >= 2");
        double ss = 0.0;
        for (double v : x) ss += (v - mu) * (v - mu);
        out.push_back(ss / (len - 1.0));
        break;
      }
      case IntervalStat::Slope: {
        if (length < 2) throw Error(ErrorCode::InvalidArgument, "slope needs an interval of length >= 2");
        const double t_mean = (len - 1.0) / 2.0;
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t t = 0; t < length; ++t) {
          const double dt = static_cast<double>(t) - t_mean;
          sxy += dt * (x[t] - mu);
          sxx += dt * dt;
        }
        out.push_back(sxy / sxx);
        break;
      }
      case IntervalStat::Median:
      case IntervalStat::Iqr: {
        if (sorted.empty()) {
          sorted.assign(x.begin(), x.end());
          std::sort(sorted.begin(), sorted.end());
        }
        out.push_back(stat == IntervalStat::Median ? quantile_sorted(sorted, 0.5)
                                                   : quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25));
        break;
      }
      case IntervalStat::Min:
        out.push_back(*std::min_element(x.begin(), x.end()));
        break;
      case IntervalStat::Max:
        out.push_back(*std::max_element(x.begin(), x.end()));
        break;
    }
  }
  return out;
}

std::vector<double> interval_features(const SeriesViews& views, const IntervalSpec& interval,
                                      std::span<const IntervalStat> stats) {
  return interval_features(views[interval.representation], interval.offset, interval.length, stats);
}

// ---------------------------------------------------------------------------

void DecisionTree::fit(const Eigen::MatrixXd& features, std::span<const int> labels, std::size_t num_classes) {
  if (features.rows() != static_cast<Eigen::Index>(labels.size()) || labels.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "tree features and labels disagree");
  }
  num_classes_ = num_classes;
  nodes_.clear();
  std::vector<std::size_t> idx(labels.size());
  std::iota(idx.begin(), idx.end(), 0);
  build(features, labels, idx, 0);
}

int DecisionTree::build(const Eigen::MatrixXd& x, std::span<const int> y, std::vector<std::size_t>& idx,
                        std::size_t depth) {
  const int self = static_cast<int>(nodes_.size());
  nodes_.push_back({});

  std::vector<std::size_t> counts(num_classes_, 0);
  for (std::size_t i : idx) ++counts[static_cast<std::size_t>(y[i])];
  const auto majority = std::max_element(counts.begin(), counts.end()) - counts.begin();
  nodes_[static_cast<std::size_t>(self)].label = static_cast<int>(majority);
  const std::size_t n = idx.size();
  if (n <= 2 || counts[static_cast<std::size_t>(majority)] == n) return self;

  const double parent = entropy(counts, n);
  double best_gain = -1.0, best_margin = -1.0, best_threshold = 0.0;
  int best_feature = -1;
  std::vector<std::pair<double, int>> column(n);
  std::vector<std::size_t> left(num_classes_), right(num_classes_);
  for (Eigen::Index f = 0; f < x.cols(); ++f) {
    for (std::size_t k = 0; k < n; ++k) column[k] = {x(static_cast<Eigen::Index>(idx[k]), f), y[idx[k]]};
    std::stable_sort(column.begin(), column.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    if (column.front().first == column.back().first) continue;
    std::fill(left.begin(), left.end(), 0);
    right = counts;
    for (std::size_t pos = 0; pos + 1 < n; ++pos) {
      const auto c = static_cast<std::size_t>(column[pos].second);
      ++left[c];
      --right[c];
      const double lo = column[pos].first, hi = column[pos + 1].first;
      if (lo == hi) continue;
      const std::size_t nl = pos + 1, nr = n - nl;
      const double gain = parent - (static_cast<double>(nl) * entropy(left, nl) +
                                    static_cast<double>(nr) * entropy(right, nr)) /
                                       static_cast<double>(n);
      double threshold = lo + (hi - lo) / 2.0;
      if (!(threshold < hi)) threshold = lo;
      const double margin = std::min(threshold - lo, hi - threshold);
      const bool better = gain > best_gain + kGainTieTolerance ||
                          (std::abs(gain - best_gain) <= kGainTieTolerance && margin > best_margin);
      if (better) {
        best_gain = gain;
        best_margin = margin;
        best_threshold = threshold;
        best_feature = static_cast<int>(f);
      }
    }
  }
  if (best_feature < 0) return self;

  std::vector<std::size_t> left_idx, right_idx;
  for (std::size_t i : idx) {
    (x(static_cast<Eigen::Index>(i), best_feature) <= best_threshold ? left_idx : right_idx).push_back(i);
  }
  idx.clear();
  idx.shrink_to_fit();
  nodes_[static_cast<std::size_t>(self)].feature = best_feature;
  nodes_[static_cast<std::size_t>(self)].threshold = best_threshold;
  const int l = build(x, y, left_idx, depth + 1);
  const int r = build(x, y, right_idx, depth + 1);
  nodes_[static_cast<std::size_t>(self)].left = l;
  nodes_[static_cast<std::size_t>(self)].right = r;
  return self;
}

int DecisionTree::predict(std::span<const double> row) const {
  std::size_t node = 0;
  while (nodes_[node].feature >= 0) {
    const auto& nd = nodes_[node];
    node = static_cast<std::size_t>(row[static_cast<std::size_t>(nd.feature)] <= nd.threshold ? nd.left : nd.right);
  }
  return nodes_[node].label;
}

std::size_t DecisionTree::depth() const {
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  std::size_t deepest = 0;
  while (!stack.empty()) {
    const auto [node, d] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, d);
    if (nodes_[node].feature >= 0) {
      stack.emplace_back(static_cast<std::size_t>(nodes_[node].left), d + 1);
      stack.emplace_back(static_cast<std::size_t>(nodes_[node].right), d + 1);
    }
  }
  return deepest;
}

std::vector<double> IntervalTree::features(const SeriesViews& views) const {
  std::vector<double> out;
  out.reserve(intervals.size() * stats.size());
  for (const auto& interval : intervals) {
    const auto f = interval_features(views, interval, stats);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t drcif_interval_count(std::size_t r) {
  return static_cast<std::size_t>(std::ceil((4.0 + std::sqrt(static_cast<double>(r))) / 3.0));
}

void IntervalForest::fit(const Dataset& train, Rng& rng) {
  train.validate();
  const bool tsf = options_.variant == IntervalForestOptions::Variant::Tsf;
  const std::size_t n = train.series_length();
  if (n < (tsf ? 3u : 4u)) {
    throw Error(ErrorCode::SeriesTooShort, std::string(tsf ? "TSF" : "DrCIF") + " needs longer series");
  }
  if (options_.num_trees == 0) throw Error(ErrorCode::InvalidArgument, "forest needs at least one tree");
  if (!tsf && (options_.attributes == 0 || options_.attributes > kIntervalCatalogue.size())) {
    throw Error(ErrorCode::InvalidArgument, "attribute subset size must be in [1, 7]");
  }
  series_length_ = n;
  num_classes_ = train.num_classes();

  std::vector<SeriesViews> views;
  views.reserve(train.n_cases());
  for (std::size_t i = 0; i < train.n_cases(); ++i) views.emplace_back(train.row(i));

  std::vector<std::uint64_t> seeds(options_.num_trees);
  for (auto& s : seeds) s = rng.next_u64();

  trees_.assign(options_.num_trees, {});
  parallel_for(options_.num_trees, [&](std::size_t t) {
    Rng tree_rng(seeds[t]);
    IntervalTree& tree = trees_[t];
    if (tsf) {
      tree.stats = {IntervalStat::Mean, IntervalStat::Variance, IntervalStat::Slope};
      const auto count = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      for (std::size_t k = 0; k < count; ++k) {
        const auto length = static_cast<std::size_t>(tree_rng.uniform_int(3, static_cast<std::int64_t>(n)));
        const auto offset = static_cast<std::size_t>(tree_rng.uniform_int(0, static_cast<std::int64_t>(n - length)));
        tree.intervals.push_back({Representation::Base, offset, length});
      }
    } else {
      std::vector<std::size_t> pool(kIntervalCatalogue.size());
      std::iota(pool.begin(), pool.end(), 0);
      tree_rng.shuffle(pool.begin(), pool.end());
      pool.resize(options_.attributes);
      std::sort(pool.begin(), pool.end());
      for (std::size_t p : pool) tree.stats.push_back(kIntervalCatalogue[p]);
      for (auto rep : {Representation::Base, Representation::Periodogram, Representation::Difference}) {
        const std::size_t r = representation_length(rep, n);
        const std::size_t min_len = std::min<std::size_t>(3, r);
        const std::size_t max_len = std::max(min_len, r / 2);
        for (std::size_t k = 0; k < drcif_interval_count(r); ++k) {
          const auto length = static_cast<std::size_t>(
              tree_rng.uniform_int(static_cast<std::int64_t>(min_len), static_cast<std::int64_t>(max_len)));
          const auto offset =
              static_cast<std::size_t>(tree_rng.uniform_int(0, static_cast<std::int64_t>(r - length)));
          tree.intervals.push_back({rep, offset, length});
        }
      }
    }
    Eigen::MatrixXd x(static_cast<Eigen::Index>(views.size()),
                      static_cast<Eigen::Index>(tree.intervals.size() * tree.stats.size()));
    for (std::size_t i = 0; i < views.size(); ++i) {
      const auto f = tree.features(views[i]);
      for (std::size_t j = 0; j < f.size(); ++j) x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = f[j];
    }
    tree.tree.fit(x, train.labels, num_classes_);
  });
}

Eigen::MatrixXd IntervalForest::votes(const SeriesMatrix& series) const {
  if (static_cast<std::size_t>(series.cols()) != series_length_) {
    throw Error(ErrorCode::DimensionMismatch, "forest fitted on a different series length");
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(series.rows(), static_cast<Eigen::Index>(num_classes_));
  parallel_for(static_cast<std::size_t>(series.rows()), [&](std::size_t i) {
    const SeriesViews views({series.data() + i * series_length_, series_length_});
    for (const auto& tree : trees_) {
      const auto f = tree.features(views);
      out(static_cast<Eigen::Index>(i), tree.tree.predict(f)) += 1.0;
    }
  });
  return out;
}

Eigen::MatrixXd IntervalForest::predict_proba(const SeriesMatrix& series) const {
  return votes(series) / static_cast<double>(trees_.size());
}

std::string IntervalForest::metadata() const {
  const bool tsf = options_.variant == IntervalForestOptions::Variant::Tsf;
  std::string out = "num_trees=" + std::to_string(options_.num_trees);
  if (tsf) {
    out += ",intervals=ceil(sqrt(n)),min_interval=3,stats=mean|variance|slope";
  } else {
    out += ",intervals_per_rep=ceil((4+sqrt(r))/3),representations=base|periodogram|difference"
           ",interval_length=[min(3|r)|max(3|r/2)],attributes=" +
           std::to_string(options_.attributes) + "_of_mean|variance|slope|median|iqr|min|max";
  }
  out += ",split=entropy,tie_break=margin,leaves=pure_or_le2,vote=majority";
  return out;
}

}  // namespace tscbench
