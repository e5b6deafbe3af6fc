#include "tscbench/dictionary.hpp"

#include "tscbench/convolution.hpp"
#include "tscbench/error.hpp"
#include "tscbench/parallel.hpp"
#include "tscbench/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace tscbench {

namespace {

double basis_weight(const DftSlot& slot, std::size_t t, std::size_t window) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(slot.frequency * t % window) /
                       static_cast<double>(window);
  return slot.imaginary ? -std::sin(angle) : std::cos(angle);
}

// Copies the dilated window starting at `offset` into `buf`, z-normalising
// it when requested.
void load_window(std::span<const double> series, std::size_t offset, const SfaConfig& config,
                 std::vector<double>& raw, std::vector<double>& buf) {
  raw.resize(config.window);
  buf.resize(config.window);
  for (std::size_t j = 0; j < config.window; ++j) raw[j] = series[offset + j * config.dilation];
  if (config.normalise) {
    znorm_into(raw, buf);
  } else {
    std::copy(raw.begin(), raw.end(), buf.begin());
  }
}

std::uint32_t word_of(std::span<const double> window, const SfaModel& model) {
  const std::size_t w = model.config.window;
  std::uint32_t word = 0;
  for (std::size_t s = 0; s < model.slots.size(); ++s) {
    const double* b = model.basis.data() + s * w;
    double v = 0.0;
    for (std::size_t t = 0; t < w; ++t) v += window[t] * b[t];
    word = word * static_cast<std::uint32_t>(model.config.alphabet) +
           static_cast<std::uint32_t>(discretise(v, model.boundaries[s]));
  }
  return word;
}

}  // namespace

std::vector<DftSlot> dft_slots(std::size_t window, bool include_dc) {
  std::vector<DftSlot> slots;
  if (include_dc) slots.push_back({0, false});
  for (std::size_t k = 1; k <= window / 2; ++k) {
    slots.push_back({k, false});
    // The Nyquist term of an even-length window is real.
    if (!(window % 2 == 0 && k == window / 2)) slots.push_back({k, true});
  }
  return slots;
}

std::vector<double> dft_coefficients(std::span<const double> window, std::size_t count, bool include_dc) {
  const auto slots = dft_slots(window.size(), include_dc);
  if (count > slots.size()) {
    throw Error(ErrorCode::InvalidArgument, "requested " + std::to_string(count) + " DFT values from a window of " +
                                                std::to_string(window.size()));
  }
  std::vector<double> out(count);
  for (std::size_t c = 0; c < count; ++c) {
    double v = 0.0;
    for (std::size_t t = 0; t < window.size(); ++t) v += window[t] * basis_weight(slots[c], t, window.size());
    out[c] = v;
  }
  return out;
}

std::vector<double> mcb_fit(std::span<const double> column, std::size_t alphabet, Binning strategy) {
  if (alphabet < 2) throw Error(ErrorCode::InvalidArgument, "alphabet size must be >= 2");
  if (column.empty()) throw Error(ErrorCode::InvalidArgument, "no values to bin");
  std::vector<double> sorted(column.begin(), column.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> boundaries(alphabet - 1);
  if (strategy == Binning::EquiWidth) {
    const double lo = sorted.front(), hi = sorted.back();
    for (std::size_t j = 1; j < alphabet; ++j) {
      boundaries[j - 1] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(alphabet);
    }
    return boundaries;
  }
  const std::size_t n = sorted.size();
  if (n < alphabet) {
    std::fill(boundaries.begin(), boundaries.end(), sorted[n / 2]);
    return boundaries;
  }
  for (std::size_t j = 1; j < alphabet; ++j) {
    const std::size_t k = j * n / alphabet;
    boundaries[j - 1] = 0.5 * (sorted[k - 1] + sorted[k]);
  }
  return boundaries;
}

std::size_t discretise(double value, std::span<const double> boundaries) {
  std::size_t symbol = 0;
  while (symbol < boundaries.size() && value > boundaries[symbol]) ++symbol;
  return symbol;
}

std::size_t SfaModel::dictionary_size() const {
  std::size_t size = 1;
  for (std::size_t i = 0; i < config.word_length; ++i) size *= config.alphabet;
  return size;
}

std::uint64_t WordBag::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

SfaModel sfa_fit(const SeriesMatrix& series, const SfaConfig& config) {
  if (config.window < 2 || config.dilation < 1 || config.alphabet < 2 || config.word_length < 1) {
    throw Error(ErrorCode::InvalidArgument, "invalid SFA configuration");
  }
  const auto candidates = dft_slots(config.window, !config.normalise);
  if (config.word_length > candidates.size()) {
    throw Error(ErrorCode::InvalidArgument, "word length " + std::to_string(config.word_length) +
                                                " exceeds the DFT values of a window of " + std::to_string(config.window));
  }
  const auto n = static_cast<std::size_t>(series.cols());
  const std::size_t per_series = window_count(n, config.window, config.dilation);
  if (per_series == 0) {
    throw Error(ErrorCode::SeriesTooShort, "SFA window " + std::to_string(config.window) + " with dilation " +
                                               std::to_string(config.dilation) + " longer than series of length " +
                                               std::to_string(n));
  }

  const std::size_t w = config.window;
  const std::size_t c = candidates.size();
  std::vector<double> full_basis(c * w);
  for (std::size_t s = 0; s < c; ++s) {
    for (std::size_t t = 0; t < w; ++t) full_basis[s * w + t] = basis_weight(candidates[s], t, w);
  }

  const std::size_t rows = per_series * static_cast<std::size_t>(series.rows());
  Eigen::MatrixXd values(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(c));
  std::vector<double> raw, buf;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < series.rows(); ++i) {
    std::span<const double> x(series.data() + static_cast<std::size_t>(i) * n, n);
    for (std::size_t offset = 0; offset < per_series; ++offset, ++r) {
      load_window(x, offset, config, raw, buf);
      for (std::size_t s = 0; s < c; ++s) {
        double v = 0.0;
        for (std::size_t t = 0; t < w; ++t) v += buf[t] * full_basis[s * w + t];
        values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) = v;
      }
    }
  }

  const Eigen::VectorXd variance =
      (values.rowwise() - values.colwise().mean()).colwise().squaredNorm().transpose() / static_cast<double>(rows);
  std::vector<std::size_t> order(c);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return variance(static_cast<Eigen::Index>(a)) > variance(static_cast<Eigen::Index>(b));
  });
  order.resize(config.word_length);
  std::sort(order.begin(), order.end());

  SfaModel model;
  model.config = config;
  for (std::size_t s : order) {
    model.slots.push_back(candidates[s]);
    model.basis.insert(model.basis.end(), full_basis.begin() + static_cast<std::ptrdiff_t>(s * w),
                       full_basis.begin() + static_cast<std::ptrdiff_t>((s + 1) * w));
    const auto col = values.col(static_cast<Eigen::Index>(s));
    model.boundaries.push_back(mcb_fit({col.data(), rows}, config.alphabet, config.binning));
  }
  return model;
}

std::uint32_t sfa_word(std::span<const double> window, const SfaModel& model) {
  if (window.size() != model.config.window) {
    throw Error(ErrorCode::DimensionMismatch, "window length does not match the SFA model");
  }
  if (!model.config.normalise) return word_of(window, model);
  return word_of(znorm(window), model);
}

WordBag bag_of_words(std::span<const double> series, const SfaModel& model) {
  const auto& config = model.config;
  const std::size_t count = window_count(series.size(), config.window, config.dilation);
  if (count == 0) throw Error(ErrorCode::SeriesTooShort, "series shorter than one SFA window");
  WordBag bag;
  bag.counts.assign(model.dictionary_size(), 0);
  std::vector<double> raw, buf;
  for (std::size_t offset = 0; offset < count; ++offset) {
    load_window(series, offset, config, raw, buf);
    ++bag.counts[word_of(buf, model)];
  }
  return bag;
}

void WeaselDTransform::fit(const Dataset& train, Rng& rng) {
  const std::size_t n = train.series_length();
  const std::size_t m = train.n_cases();
  // The differenced series has n - 1 values and the longest word needs 9.
  if (n < 10) throw Error(ErrorCode::SeriesTooShort, "WEASEL-D needs series of length >= 10");
  if (options_.word_lengths.empty() ||
      std::any_of(options_.word_lengths.begin(), options_.word_lengths.end(), [](std::size_t l) { return l < 1 || l > 8; })) {
    throw Error(ErrorCode::InvalidArgument, "WEASEL-D word lengths must lie in [1, 8]");
  }
  series_length_ = n;
  const std::size_t max_window = std::min(options_.max_window, n - 1);
  const std::size_t configs = std::clamp((m + 1) / 2, options_.min_configs, options_.max_configs);

  SeriesMatrix diff = train.series.rightCols(static_cast<Eigen::Index>(n - 1)) -
                      train.series.leftCols(static_cast<Eigen::Index>(n - 1));

  std::vector<SfaConfig> drawn(configs);
  for (auto& config : drawn) {
    config.word_length = options_.word_lengths[rng.index(options_.word_lengths.size())];
    const std::size_t min_window = std::max(options_.min_window, config.word_length + 1);
    config.window = static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(min_window), static_cast<std::int64_t>(max_window)));
    config.dilation = sample_exponential_dilation(n - 1, config.window, rng);
    config.alphabet = 2;
    config.binning = rng.bernoulli(0.5) ? Binning::EquiDepth : Binning::EquiWidth;
    config.normalise = rng.bernoulli(options_.normalise_probability);
  }

  models_.assign(configs, {});
  parallel_for(configs, [&](std::size_t r) {
    SfaConfig base = drawn[r];
    SfaConfig differenced = base;
    differenced.use_diff = true;
    models_[r] = {sfa_fit(train.series, base), sfa_fit(diff, differenced)};
  });
  num_features_ = 0;
  for (const auto& [base, differenced] : models_) num_features_ += base.dictionary_size() + differenced.dictionary_size();
}

Eigen::MatrixXd WeaselDTransform::transform(const SeriesMatrix& series) const {
  const std::size_t n = series_length_;
  if (static_cast<std::size_t>(series.cols()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "WEASEL-D fitted on a different series length");
  }
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out(
      series.rows(), static_cast<Eigen::Index>(num_features_));
  parallel_for(static_cast<std::size_t>(series.rows()), [&](std::size_t i) {
    std::span<const double> x(series.data() + i * n, n);
    const auto diff = first_difference(x);
    double* row = out.data() + i * num_features_;
    for (const auto& [base, differenced] : models_) {
      for (std::uint32_t c : bag_of_words(x, base).counts) *row++ = c;
      for (std::uint32_t c : bag_of_words(diff, differenced).counts) *row++ = c;
    }
  });
  return out;
}

namespace {

std::string join_lengths(const std::vector<std::size_t>& lengths) {
  std::string out;
  for (std::size_t l : lengths) out += (out.empty() ? "" : "|") + std::to_string(l);
  return out;
}

}  // namespace

std::string WeaselDTransform::metadata() const {
  return "configs=" + std::to_string(models_.size()) + ",num_features=" + std::to_string(num_features_) +
         ",configs_rule=clamp(ceil(m/2)|" + std::to_string(options_.min_configs) + "|" +
         std::to_string(options_.max_configs) + "),window=U[max(" + std::to_string(options_.min_window) +
         "|l+1)|min(" + std::to_string(options_.max_window) +
         "|n-1)],word_length=" + join_lengths(options_.word_lengths) + ",alphabet=2,dilation=floor(2^U(0|log2((n-2)/(w-1)))),binning=equi-depth|equi-width"
         ",normalise=bernoulli(0.5),coefficients=highest_variance_per_config,feature_selection=none";
}

}  // namespace tscbench
