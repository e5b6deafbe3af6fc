#pragma once

#include "tscbench/transform.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace tscbench {

struct Kernel {
  std::vector<double> weights;
  double bias = 0.0;
  std::size_t dilation = 1;
  // Zero-pad floor(l/2)*d values on each side so the map has the input's length.
  bool padding = false;

  std::size_t length() const { return weights.size(); }
  std::size_t pad() const { return padding ? (length() / 2) * dilation : 0; }
};

// Length of the activation map of `kernel` over a series of length n; zero
// when the receptive field does not fit.
std::size_t activation_length(std::size_t n, const Kernel& kernel);

// map[i] = sum_j x[i - pad + j*d] * w[j] + b, with out-of-range values read as 0.
std::vector<double> apply_kernel(std::span<const double> series, const Kernel& kernel);
void apply_kernel_into(std::span<const double> series, const Kernel& kernel, std::vector<double>& map);

enum class Pooling { Max, Ppv, Mpv, Mipv, Lspv };

const char* to_string(Pooling op);

// "Positive" means strictly greater than zero. With no positive values MPV is
// 0 and MIPV is -1; MIPV averages 0-based indices of positive entries.
double pool(std::span<const double> map, Pooling op);

// Random kernels with lengths {7,9,11}, N(0,1) mean-centred weights,
// U(-1,1) bias, exponential dilation and coin-flip padding; MAX and PPV.
class RocketTransform final : public FeatureTransform {
 public:
  explicit RocketTransform(std::size_t num_kernels = 10000) : num_kernels_(num_kernels) {}

  void fit(const Dataset& train, Rng& rng) override;
  Eigen::MatrixXd transform(const SeriesMatrix& series) const override;
  std::size_t num_features() const override { return 2 * kernels_.size(); }
  std::string metadata() const override;

  const std::vector<Kernel>& kernels() const { return kernels_; }

 private:
  std::size_t num_kernels_;
  std::size_t series_length_ = 0;
  std::vector<Kernel> kernels_;
};

// d = floor(2^u), u ~ U(0, log2((n-1)/(l-1))); 1 when the bound is below 1.
std::size_t sample_exponential_dilation(std::size_t n, std::size_t length, Rng& rng);

// The fixed length-9 kernels built from three weights of 2 and six of -1.
const std::vector<std::array<double, 9>>& minirocket_weights();

// Dilations (and features per dilation) for one kernel with `features`
// output slots on series of length n.
struct DilationPlan {
  std::vector<std::size_t> dilations;
  std::vector<std::size_t> features_per_dilation;
};
DilationPlan minirocket_dilations(std::size_t n, std::size_t features, std::size_t max_dilations = 32);

// MiniROCKET-style feature machinery shared by MiniROCKET and MultiROCKET:
// for each (kernel, dilation) one convolution and several biases drawn from
// quantiles of a random training example's activation map.
class MiniRocketCore {
 public:
  struct MapSpec {
    std::size_t kernel_index = 0;
    std::size_t dilation = 1;
    bool padded = true;
    std::vector<double> biases;  // added to the raw convolution
  };

  // Requests of at least 84 are rounded down to a multiple of 84.
  void fit(const SeriesMatrix& series, std::size_t requested_features, Rng& rng);

  // Writes ops.size() * num_configs() values: one contiguous block per op.
  void transform_row(std::span<const double> series, std::span<const Pooling> ops, std::span<double> out) const;

  std::size_t num_configs() const { return num_configs_; }
  std::size_t series_length() const { return series_length_; }
  const std::vector<MapSpec>& specs() const { return specs_; }
  // Equivalent explicit kernels, one per config, in feature order.
  std::vector<Kernel> kernels() const;

 private:
  std::size_t series_length_ = 0;
  std::size_t num_configs_ = 0;
  std::vector<MapSpec> specs_;
};

class MiniRocketTransform final : public FeatureTransform {
 public:
  explicit MiniRocketTransform(std::size_t num_features = 10000) : requested_(num_features) {}

  void fit(const Dataset& train, Rng& rng) override;
  Eigen::MatrixXd transform(const SeriesMatrix& series) const override;
  std::size_t num_features() const override { return core_.num_configs(); }
  std::string metadata() const override;

  const MiniRocketCore& core() const { return core_; }

 private:
  std::size_t requested_;
  MiniRocketCore core_;
};

// MiniROCKET machinery on the series (same draws as MiniRocketTransform with
// the same seed) and on its first differences, each pooled with PPV, MPV,
// MIPV and LSPV. Layout: [base PPV | base MPV | base MIPV | base LSPV | diff ...].
class MultiRocketTransform final : public FeatureTransform {
 public:
  explicit MultiRocketTransform(std::size_t base_features = 10000, std::size_t diff_features = 2499)
      : base_requested_(base_features), diff_requested_(diff_features) {}

  void fit(const Dataset& train, Rng& rng) override;
  Eigen::MatrixXd transform(const SeriesMatrix& series) const override;
  std::size_t num_features() const override { return 4 * (base_.num_configs() + diff_.num_configs()); }
  std::string metadata() const override;

  const MiniRocketCore& base_core() const { return base_; }
  const MiniRocketCore& diff_core() const { return diff_; }

  static constexpr std::array<Pooling, 4> kOps{Pooling::Ppv, Pooling::Mpv, Pooling::Mipv, Pooling::Lspv};

 private:
  std::size_t base_requested_;
  std::size_t diff_requested_;
  MiniRocketCore base_;
  MiniRocketCore diff_;
};

struct HydraConfig {
  std::size_t groups = 64;
  std::size_t kernels_per_group = 8;
};

// Groups of competing random kernels; each timepoint increments the count of
// the group's best-matching kernel (ties to the lowest index). Applied to the
// series and its first differences at dilations 1, 2, 4, ... up to the
// receptive-field bound. Features are square roots of the counts.
class HydraTransform final : public FeatureTransform {
 public:
  explicit HydraTransform(HydraConfig config = {});

  void fit(const Dataset& train, Rng& rng) override;
  Eigen::MatrixXd transform(const SeriesMatrix& series) const override;
  std::size_t num_features() const override {
    return 2 * dilations_.size() * config_.groups * config_.kernels_per_group;
  }
  std::string metadata() const override;

  // Raw argmax counts; layout [rep][dilation][group][kernel].
  std::vector<double> counts(std::span<const double> series) const;

  const std::vector<std::size_t>& dilations() const { return dilations_; }
  // Weights of kernel `kernel` in group `group` for (rep, dilation index).
  std::span<const double> kernel_weights(std::size_t rep, std::size_t dilation_index, std::size_t group,
                                         std::size_t kernel) const;
  const HydraConfig& config() const { return config_; }

  static constexpr std::size_t kKernelLength = 9;

 private:
  HydraConfig config_;
  std::size_t series_length_ = 0;
  std::vector<std::size_t> dilations_;
  // [rep][dilation][group][kernel][9]
  std::vector<double> weights_;
};

}  // namespace tscbench
