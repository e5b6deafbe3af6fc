#include "tscbench/shapelet.hpp"

#include "tscbench/convolution.hpp"
#include "tscbench/error.hpp"
#include "tscbench/parallel.hpp"
#include "tscbench/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace tscbench {

namespace {

double percentile(std::vector<double> values, double q) {
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (values[hi] - values[lo]) * (pos - static_cast<double>(lo));
}

// Every window distance, used to calibrate a shapelet's threshold.
std::vector<double> all_distances(const Shapelet& s, std::span<const double> series) {
  const std::size_t count = window_count(series.size(), s.length(), s.dilation);
  std::vector<double> out(count);
  std::vector<double> window(s.length()), z(s.length());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < s.length(); ++j) window[j] = series[i + j * s.dilation];
    if (s.normalise) {
      znorm_into(window, z);
    } else {
      z = window;
    }
    double d = 0.0;
    for (std::size_t j = 0; j < s.length(); ++j) d += (s.values[j] - z[j]) * (s.values[j] - z[j]);
    out[i] = d;
  }
  return out;
}

}  // namespace

WindowStats window_stats(std::span<const double> series, std::size_t length, std::size_t dilation) {
  const std::size_t count = window_count(series.size(), length, dilation);
  WindowStats stats;
  stats.mean.resize(count);
  stats.stdev.resize(count);
  const auto l = static_cast<double>(length);
  for (std::size_t i = 0; i < count; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < length; ++j) s += series[i + j * dilation];
    const double mu = s / l;
    double ss = 0.0;
    for (std::size_t j = 0; j < length; ++j) {
      const double v = series[i + j * dilation] - mu;
      ss += v * v;
    }
    stats.mean[i] = mu;
    stats.stdev[i] = std::sqrt(ss / l);
  }
  return stats;
}

ShapeletMatch sdist(const Shapelet& shapelet, std::span<const double> series, const WindowStats& stats) {
  const std::size_t l = shapelet.length();
  const std::size_t d = shapelet.dilation;
  const std::size_t count = window_count(series.size(), l, d);
  if (count == 0 || l == 0) {
    throw Error(ErrorCode::SeriesTooShort, "no window of length " + std::to_string(l) + " and dilation " +
                                               std::to_string(d) + " in a series of length " +
                                               std::to_string(series.size()));
  }
  if (shapelet.normalise && stats.mean.size() != count) {
    throw Error(ErrorCode::DimensionMismatch, "window statistics do not match the shapelet");
  }
  ShapeletMatch match;
  match.min_dist = std::numeric_limits<double>::infinity();
  const double* s = shapelet.values.data();
  for (std::size_t i = 0; i < count; ++i) {
    // Partial sums only grow, so a window can be abandoned once it can
    // neither set a new minimum nor fall under the threshold.
    const double bound = std::max(match.min_dist, shapelet.threshold);
    double acc = 0.0;
    bool abandoned = false;
    if (shapelet.normalise) {
      const double mu = stats.mean[i];
      const double sd = stats.stdev[i];
      const bool constant = sd <= kConstantTolerance * (1.0 + std::abs(mu));
      for (std::size_t j = 0; j < l; ++j) {
        const double z = constant ? 0.0 : (series[i + j * d] - mu) / sd;
        acc += (s[j] - z) * (s[j] - z);
        if (acc >= bound) {
          abandoned = true;
          break;
        }
      }
    } else {
      for (std::size_t j = 0; j < l; ++j) {
        const double diff = s[j] - series[i + j * d];
        acc += diff * diff;
        if (acc >= bound) {
          abandoned = true;
          break;
        }
      }
    }
    if (abandoned) continue;
    if (acc < match.min_dist) {
      match.min_dist = acc;
      match.argmin = i;
    }
    if (acc < shapelet.threshold) ++match.count_below;
  }
  return match;
}

ShapeletMatch sdist(const Shapelet& shapelet, std::span<const double> series) {
  if (!shapelet.normalise) return sdist(shapelet, series, WindowStats{});
  return sdist(shapelet, series, window_stats(series, shapelet.length(), shapelet.dilation));
}

std::vector<Shapelet> sample_shapelets(const Dataset& train, std::size_t count, Rng& rng,
                                       const ShapeletOptions& options) {
  const std::size_t n = train.series_length();
  const std::size_t m = train.n_cases();
  const std::size_t l = options.length;
  if (l < 2) throw Error(ErrorCode::InvalidArgument, "shapelet length must be >= 2");
  if (n < l) {
    throw Error(ErrorCode::SeriesTooShort, "series of length " + std::to_string(n) + " shorter than shapelet length " +
                                               std::to_string(l));
  }
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "need at least one shapelet");
  std::vector<Shapelet> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Shapelet s;
    s.source_series = rng.index(m);
    s.dilation = sample_exponential_dilation(n, l, rng);
    s.source_offset = rng.index(window_count(n, l, s.dilation));
    s.normalise = rng.bernoulli(options.normalise_probability);
    const auto source = train.row(s.source_series);
    s.values = extract_window(source, {s.source_offset, l, s.dilation});
    if (s.normalise) s.values = znorm(s.values);

    std::size_t other = s.source_series;
    if (m > 1) {
      other = rng.index(m - 1);
      if (other >= s.source_series) ++other;
    }
    const auto distances = all_distances(s, train.row(other));
    const double lo = percentile(distances, options.threshold_low_percentile);
    const double hi = percentile(distances, options.threshold_high_percentile);
    s.threshold = rng.uniform(lo, hi);
    out.push_back(std::move(s));
  }
  return out;
}

void RdstTransform::fit(const Dataset& train, Rng& rng) {
  series_length_ = train.series_length();
  shapelets_ = sample_shapelets(train, num_shapelets_, rng, options_);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < shapelets_.size(); ++k) groups[shapelets_[k].dilation].push_back(k);
  by_dilation_.assign(groups.begin(), groups.end());
}

Eigen::MatrixXd RdstTransform::transform(const SeriesMatrix& series) const {
  const std::size_t n = series_length_;
  if (static_cast<std::size_t>(series.cols()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "RDST fitted on a different series length");
  }
  const std::size_t f = num_features();
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out(series.rows(), static_cast<Eigen::Index>(f));
  parallel_for(static_cast<std::size_t>(series.rows()), [&](std::size_t i) {
    std::span<const double> x(series.data() + i * n, n);
    double* row = out.data() + i * f;
    for (const auto& [dilation, members] : by_dilation_) {
      const auto stats = window_stats(x, options_.length, dilation);
      for (std::size_t k : members) {
        const auto match = sdist(shapelets_[k], x, stats);
        row[3 * k] = match.min_dist;
        row[3 * k + 1] = static_cast<double>(match.argmin);
        row[3 * k + 2] = static_cast<double>(match.count_below);
      }
    }
  });
  return out;
}

std::string RdstTransform::metadata() const {
  return "num_shapelets=" + std::to_string(shapelets_.size()) + ",shapelet_length=" + std::to_string(options_.length) +
         ",normalise=bernoulli(" + std::to_string(options_.normalise_probability) +
         "),threshold=U(p5|p10)_of_distances_to_one_other_training_series"
         ",dilation=floor(2^U(0|log2((n-1)/(l-1)))),distance=squared,features=min|argmin|count_below";
}

}  // namespace tscbench
