#include "tscbench/convolution.hpp"

#include "tscbench/error.hpp"
#include "tscbench/parallel.hpp"
#include "tscbench/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace tscbench {

namespace {

// Linear-interpolated quantile of sorted data.
double sorted_quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - static_cast<double>(lo));
}

// Zero-padded "same" convolution of a length-9 kernel, without bias.
void same_convolution9(std::span<const double> x, const double* w, std::size_t dilation, std::vector<double>& out) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  const auto d = static_cast<std::ptrdiff_t>(dilation);
  const std::ptrdiff_t pad = 4 * d;
  out.resize(x.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::ptrdiff_t j = 0; j < 9; ++j) {
      const std::ptrdiff_t idx = i - pad + j * d;
      if (idx >= 0 && idx < n) s += x[static_cast<std::size_t>(idx)] * w[j];
    }
    out[static_cast<std::size_t>(i)] = s;
  }
}

struct PooledStats {
  double ppv = 0.0;
  double mpv = 0.0;
  double mipv = -1.0;
  double lspv = 0.0;
};

// PPV/MPV/MIPV/LSPV of (values + bias) in one pass, matching pool().
PooledStats pool_shifted(const double* values, std::size_t len, double bias) {
  std::size_t positives = 0, run = 0, longest = 0;
  double sum = 0.0, index_sum = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double v = values[i] + bias;
    if (v > 0.0) {
      ++positives;
      sum += v;
      index_sum += static_cast<double>(i);
      longest = std::max(longest, ++run);
    } else {
      run = 0;
    }
  }
  PooledStats s;
  s.ppv = static_cast<double>(positives) / static_cast<double>(len);
  if (positives > 0) {
    s.mpv = sum / static_cast<double>(positives);
    s.mipv = index_sum / static_cast<double>(positives);
  }
  s.lspv = static_cast<double>(longest);
  return s;
}

SeriesMatrix difference_rows(const SeriesMatrix& x) {
  return x.rightCols(x.cols() - 1) - x.leftCols(x.cols() - 1);
}

}  // namespace

std::size_t activation_length(std::size_t n, const Kernel& kernel) {
  const std::size_t span = (kernel.length() - 1) * kernel.dilation;
  const std::size_t padded = n + 2 * kernel.pad();
  return padded > span ? padded - span : 0;
}

void apply_kernel_into(std::span<const double> series, const Kernel& kernel, std::vector<double>& map) {
  if (kernel.length() == 0 || kernel.dilation == 0) throw Error(ErrorCode::InvalidArgument, "invalid kernel");
  const std::size_t len = activation_length(series.size(), kernel);
  if (len == 0) {
    throw Error(ErrorCode::SeriesTooShort, "receptive field " + std::to_string((kernel.length() - 1) * kernel.dilation + 1) +
                                               " exceeds padded series length");
  }
  const auto n = static_cast<std::ptrdiff_t>(series.size());
  const auto d = static_cast<std::ptrdiff_t>(kernel.dilation);
  const auto p = static_cast<std::ptrdiff_t>(kernel.pad());
  const auto l = static_cast<std::ptrdiff_t>(kernel.length());
  map.resize(len);
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(len); ++i) {
    double s = 0.0;
    for (std::ptrdiff_t j = 0; j < l; ++j) {
      const std::ptrdiff_t idx = i - p + j * d;
      if (idx >= 0 && idx < n) s += series[static_cast<std::size_t>(idx)] * kernel.weights[static_cast<std::size_t>(j)];
    }
    map[static_cast<std::size_t>(i)] = s + kernel.bias;
  }
}

std::vector<double> apply_kernel(std::span<const double> series, const Kernel& kernel) {
  std::vector<double> map;
  apply_kernel_into(series, kernel, map);
  return map;
}

const char* to_string(Pooling op) {
  switch (op) {
    case Pooling::Max: return "MAX";
    case Pooling::Ppv: return "PPV";
    case Pooling::Mpv: return "MPV";
    case Pooling::Mipv: return "MIPV";
    case Pooling::Lspv: return "LSPV";
  }
  return "?";
}

double pool(std::span<const double> map, Pooling op) {
  if (map.empty()) throw Error(ErrorCode::InvalidArgument, "pooling an empty activation map");
  if (op == Pooling::Max) return *std::max_element(map.begin(), map.end());
  const auto s = pool_shifted(map.data(), map.size(), 0.0);
  switch (op) {
    case Pooling::Ppv: return s.ppv;
    case Pooling::Mpv: return s.mpv;
    case Pooling::Mipv: return s.mipv;
    case Pooling::Lspv: return s.lspv;
    default: return 0.0;
  }
}

std::size_t sample_exponential_dilation(std::size_t n, std::size_t length, Rng& rng) {
  const double ratio = static_cast<double>(n - 1) / static_cast<double>(length - 1);
  const double upper = ratio > 1.0 ? std::log2(ratio) : 0.0;
  const double u = rng.uniform(0.0, upper);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::pow(2.0, u))));
}

// ---------------------------------------------------------------------------
// ROCKET

void RocketTransform::fit(const Dataset& train, Rng& rng) {
  series_length_ = train.series_length();
  if (series_length_ < 2) throw Error(ErrorCode::SeriesTooShort, "ROCKET needs series of length >= 2");
  if (num_kernels_ == 0) throw Error(ErrorCode::InvalidArgument, "ROCKET needs at least one kernel");
  static constexpr std::array<std::size_t, 3> lengths{7, 9, 11};
  kernels_.clear();
  kernels_.reserve(num_kernels_);
  for (std::size_t k = 0; k < num_kernels_; ++k) {
    Kernel kernel;
    const std::size_t l = lengths[rng.index(lengths.size())];
    kernel.weights.resize(l);
    for (auto& w : kernel.weights) w = rng.normal();
    const double mu = mean(kernel.weights);
    for (auto& w : kernel.weights) w -= mu;
    kernel.bias = rng.uniform(-1.0, 1.0);
    kernel.dilation = sample_exponential_dilation(series_length_, l, rng);
    kernel.padding = rng.bernoulli(0.5);
    // Short series: an unpadded map would be empty.
    if (activation_length(series_length_, kernel) == 0) kernel.padding = true;
    kernels_.push_back(std::move(kernel));
  }
}

Eigen::MatrixXd RocketTransform::transform(const SeriesMatrix& series) const {
  if (static_cast<std::size_t>(series.cols()) != series_length_) {
    throw Error(ErrorCode::DimensionMismatch, "ROCKET fitted on a different series length");
  }
  Eigen::MatrixXd out(series.rows(), static_cast<Eigen::Index>(num_features()));
  const auto n = static_cast<std::size_t>(series.cols());
  parallel_for(static_cast<std::size_t>(series.rows()), [&](std::size_t i) {
    std::span<const double> x(series.data() + i * n, n);
    std::vector<double> map;
    for (std::size_t k = 0; k < kernels_.size(); ++k) {
      apply_kernel_into(x, kernels_[k], map);
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(2 * k)) = pool(map, Pooling::Max);
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(2 * k + 1)) = pool(map, Pooling::Ppv);
    }
  });
  return out;
}

std::string RocketTransform::metadata() const {
  return "num_kernels=" + std::to_string(num_kernels_) +
         ",kernel_lengths=7|9|11,weights=normal_mean_centred,bias=uniform(-1|1)"
         ",dilation=floor(2^U(0|log2((n-1)/(l-1)))),padding=bernoulli(0.5),pooling=MAX|PPV";
}

// ---------------------------------------------------------------------------
// MiniROCKET machinery

const std::vector<std::array<double, 9>>& minirocket_weights() {
  static const std::vector<std::array<double, 9>> kernels = [] {
    std::vector<std::array<double, 9>> out;
    for (int a = 0; a < 9; ++a) {
      for (int b = a + 1; b < 9; ++b) {
        for (int c = b + 1; c < 9; ++c) {
          std::array<double, 9> w;
          w.fill(-1.0);
          w[static_cast<std::size_t>(a)] = w[static_cast<std::size_t>(b)] = w[static_cast<std::size_t>(c)] = 2.0;
          out.push_back(w);
        }
      }
    }
    return out;
  }();
  return kernels;
}

DilationPlan minirocket_dilations(std::size_t n, std::size_t features, std::size_t max_dilations) {
  DilationPlan plan;
  if (features == 0) return plan;
  const std::size_t steps = std::min(features, max_dilations);
  const double multiplier = static_cast<double>(features) / static_cast<double>(steps);
  const double max_exponent = std::log2(static_cast<double>(n - 1) / 8.0);
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < steps; ++i) {
    const double e = steps == 1 ? 0.0 : max_exponent * static_cast<double>(i) / static_cast<double>(steps - 1);
    const auto d = std::max<std::size_t>(1, static_cast<std::size_t>(std::pow(2.0, e)));
    if (!plan.dilations.empty() && plan.dilations.back() == d) {
      ++counts.back();
    } else {
      plan.dilations.push_back(d);
      counts.push_back(1);
    }
  }
  std::size_t assigned = 0;
  for (std::size_t c : counts) {
    plan.features_per_dilation.push_back(static_cast<std::size_t>(static_cast<double>(c) * multiplier));
    assigned += plan.features_per_dilation.back();
  }
  for (std::size_t i = 0; assigned < features; i = (i + 1) % counts.size(), ++assigned) {
    ++plan.features_per_dilation[i];
  }
  return plan;
}

void MiniRocketCore::fit(const SeriesMatrix& series, std::size_t requested_features, Rng& rng) {
  const auto n = static_cast<std::size_t>(series.cols());
  if (n < 9) throw Error(ErrorCode::SeriesTooShort, "MiniROCKET kernels need series of length >= 9");
  if (series.rows() < 1) throw Error(ErrorCode::InvalidArgument, "no training series");
  const auto& weights = minirocket_weights();
  const std::size_t num_kernels = weights.size();
  series_length_ = n;
  specs_.clear();
  num_configs_ = 0;

  const double golden = (std::sqrt(5.0) + 1.0) / 2.0;
  std::size_t feature_index = 0;
  std::vector<double> map;
  for (std::size_t k = 0; k < num_kernels; ++k) {
    const std::size_t features = requested_features >= num_kernels ? requested_features / num_kernels
                                                                   : (k < requested_features ? 1 : 0);
    const auto plan = minirocket_dilations(n, features);
    for (std::size_t di = 0; di < plan.dilations.size(); ++di) {
      MapSpec spec;
      spec.kernel_index = k;
      spec.dilation = plan.dilations[di];
      spec.padded = (di + k) % 2 == 0;
      const std::size_t example = rng.index(static_cast<std::size_t>(series.rows()));
      same_convolution9({series.data() + example * n, n}, weights[k].data(), spec.dilation, map);
      std::sort(map.begin(), map.end());
      for (std::size_t f = 0; f < plan.features_per_dilation[di]; ++f) {
        ++feature_index;
        const double q = std::fmod(static_cast<double>(feature_index) * golden, 1.0);
        spec.biases.push_back(-sorted_quantile(map, q));
      }
      num_configs_ += spec.biases.size();
      specs_.push_back(std::move(spec));
    }
  }
}

void MiniRocketCore::transform_row(std::span<const double> series, std::span<const Pooling> ops,
                                   std::span<double> out) const {
  const auto& weights = minirocket_weights();
  std::vector<double> map;
  std::size_t slot = 0;
  for (const auto& spec : specs_) {
    same_convolution9(series, weights[spec.kernel_index].data(), spec.dilation, map);
    const std::size_t pad = spec.padded ? 0 : 4 * spec.dilation;
    const double* values = map.data() + pad;
    const std::size_t len = map.size() - 2 * pad;
    for (double bias : spec.biases) {
      const auto s = pool_shifted(values, len, bias);
      for (std::size_t o = 0; o < ops.size(); ++o) {
        double v = 0.0;
        switch (ops[o]) {
          case Pooling::Ppv: v = s.ppv; break;
          case Pooling::Mpv: v = s.mpv; break;
          case Pooling::Mipv: v = s.mipv; break;
          case Pooling::Lspv: v = s.lspv; break;
          case Pooling::Max: {
            double best = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < len; ++i) best = std::max(best, values[i] + bias);
            v = best;
            break;
          }
        }
        out[o * num_configs_ + slot] = v;
      }
      ++slot;
    }
  }
}

std::vector<Kernel> MiniRocketCore::kernels() const {
  const auto& weights = minirocket_weights();
  std::vector<Kernel> out;
  out.reserve(num_configs_);
  for (const auto& spec : specs_) {
    for (double bias : spec.biases) {
      Kernel k;
      k.weights.assign(weights[spec.kernel_index].begin(), weights[spec.kernel_index].end());
      k.bias = bias;
      k.dilation = spec.dilation;
      k.padding = spec.padded;
      out.push_back(std::move(k));
    }
  }
  return out;
}

void MiniRocketTransform::fit(const Dataset& train, Rng& rng) { core_.fit(train.series, requested_, rng); }

Eigen::MatrixXd MiniRocketTransform::transform(const SeriesMatrix& series) const {
  const std::size_t n = core_.series_length();
  if (static_cast<std::size_t>(series.cols()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "MiniROCKET fitted on a different series length");
  }
  const std::size_t f = num_features();
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out(series.rows(), static_cast<Eigen::Index>(f));
  static constexpr std::array<Pooling, 1> ops{Pooling::Ppv};
  parallel_for(static_cast<std::size_t>(series.rows()), [&](std::size_t i) {
    core_.transform_row({series.data() + i * n, n}, ops, {out.data() + i * f, f});
  });
  return out;
}

std::string MiniRocketTransform::metadata() const {
  return "num_features=" + std::to_string(num_features()) +
         ",kernel_length=9,weights=-1|2,bias=quantiles_of_one_random_training_map,pooling=PPV,max_dilations=32";
}

void MultiRocketTransform::fit(const Dataset& train, Rng& rng) {
  if (train.series_length() < 10) {
    throw Error(ErrorCode::SeriesTooShort, "MultiROCKET needs series of length >= 10");
  }
  base_.fit(train.series, base_requested_, rng);
  diff_.fit(difference_rows(train.series), diff_requested_, rng);
}

Eigen::MatrixXd MultiRocketTransform::transform(const SeriesMatrix& series) const {
  const std::size_t n = base_.series_length();
  if (static_cast<std::size_t>(series.cols()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "MultiROCKET fitted on a different series length");
  }
  const std::size_t f = num_features();
  const std::size_t base_width = kOps.size() * base_.num_configs();
  const std::size_t diff_width = kOps.size() * diff_.num_configs();
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out(series.rows(), static_cast<Eigen::Index>(f));
  parallel_for(static_cast<std::size_t>(series.rows()), [&](std::size_t i) {
    std::span<const double> x(series.data() + i * n, n);
    std::vector<double> diff(n - 1);
    for (std::size_t t = 0; t + 1 < n; ++t) diff[t] = x[t + 1] - x[t];
    double* row = out.data() + i * f;
    base_.transform_row(x, kOps, {row, base_width});
    diff_.transform_row(diff, kOps, {row + base_width, diff_width});
  });
  return out;
}

std::string MultiRocketTransform::metadata() const {
  return "num_features=" + std::to_string(num_features()) + ",base_configs=" + std::to_string(base_.num_configs()) +
         ",diff_configs=" + std::to_string(diff_.num_configs()) +
         ",pooling=PPV|MPV|MIPV|LSPV,mpv_empty=0,mipv_empty=-1,mipv_index=0_based_unnormalised";
}

// ---------------------------------------------------------------------------
// Hydra

HydraTransform::HydraTransform(HydraConfig config) : config_(config) {
  if (config_.groups < 1 || config_.kernels_per_group < 2) {
    throw Error(ErrorCode::InvalidArgument, "Hydra needs g >= 1 groups of k >= 2 kernels");
  }
}

void HydraTransform::fit(const Dataset& train, Rng& rng) {
  series_length_ = train.series_length();
  if (series_length_ < kKernelLength) {
    throw Error(ErrorCode::SeriesTooShort, "Hydra needs series of length >= 9");
  }
  const double max_exponent = std::log2(static_cast<double>(series_length_ - 1) / 8.0);
  dilations_.clear();
  for (int e = 0; e <= static_cast<int>(std::floor(max_exponent)); ++e) dilations_.push_back(std::size_t{1} << e);

  const std::size_t num_kernels = 2 * dilations_.size() * config_.groups * config_.kernels_per_group;
  weights_.resize(num_kernels * kKernelLength);
  for (std::size_t k = 0; k < num_kernels; ++k) {
    double* w = weights_.data() + k * kKernelLength;
    double mu = 0.0;
    for (std::size_t j = 0; j < kKernelLength; ++j) mu += (w[j] = rng.normal());
    mu /= static_cast<double>(kKernelLength);
    double l1 = 0.0;
    for (std::size_t j = 0; j < kKernelLength; ++j) l1 += std::abs(w[j] -= mu);
    for (std::size_t j = 0; j < kKernelLength; ++j) w[j] /= l1;
  }
}

std::span<const double> HydraTransform::kernel_weights(std::size_t rep, std::size_t dilation_index, std::size_t group,
                                                       std::size_t kernel) const {
  const std::size_t g = config_.groups, k = config_.kernels_per_group;
  const std::size_t index = ((rep * dilations_.size() + dilation_index) * g + group) * k + kernel;
  return {weights_.data() + index * kKernelLength, kKernelLength};
}

std::vector<double> HydraTransform::counts(std::span<const double> series) const {
  if (series.size() != series_length_) throw Error(ErrorCode::DimensionMismatch, "Hydra fitted on a different series length");
  const std::size_t g = config_.groups, k = config_.kernels_per_group;
  std::vector<double> out(num_features(), 0.0);
  const auto diff = first_difference(series);
  std::vector<double> activation(k);
  for (std::size_t rep = 0; rep < 2; ++rep) {
    const std::span<const double> x = rep == 0 ? series : std::span<const double>(diff);
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    for (std::size_t di = 0; di < dilations_.size(); ++di) {
      const auto d = static_cast<std::ptrdiff_t>(dilations_[di]);
      const std::ptrdiff_t pad = 4 * d;
      for (std::size_t grp = 0; grp < g; ++grp) {
        double* count = out.data() + ((rep * dilations_.size() + di) * g + grp) * k;
        const double* w0 = kernel_weights(rep, di, grp, 0).data();
        for (std::ptrdiff_t t = 0; t < n; ++t) {
          std::size_t best = 0;
          double best_value = -std::numeric_limits<double>::infinity();
          for (std::size_t kk = 0; kk < k; ++kk) {
            const double* w = w0 + kk * kKernelLength;
            double s = 0.0;
            for (std::ptrdiff_t j = 0; j < 9; ++j) {
              const std::ptrdiff_t idx = t - pad + j * d;
              if (idx >= 0 && idx < n) s += x[static_cast<std::size_t>(idx)] * w[j];
            }
            if (s > best_value) {
              best_value = s;
              best = kk;
            }
          }
          count[best] += 1.0;
        }
      }
    }
  }
  return out;
}

Eigen::MatrixXd HydraTransform::transform(const SeriesMatrix& series) const {
  const std::size_t n = series_length_;
  if (static_cast<std::size_t>(series.cols()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "Hydra fitted on a different series length");
  }
  const std::size_t f = num_features();
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out(series.rows(), static_cast<Eigen::Index>(f));
  parallel_for(static_cast<std::size_t>(series.rows()), [&](std::size_t i) {
    const auto c = counts({series.data() + i * n, n});
    for (std::size_t j = 0; j < f; ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::sqrt(c[j]);
  });
  return out;
}

std::string HydraTransform::metadata() const {
  return "groups=" + std::to_string(config_.groups) + ",kernels_per_group=" + std::to_string(config_.kernels_per_group) +
         ",dilations=" + std::to_string(dilations_.size()) +
         ",weights=normal_mean_centred_l1,padding=same,ties=lowest_kernel,features=sqrt_counts";
}

}  // namespace tscbench
