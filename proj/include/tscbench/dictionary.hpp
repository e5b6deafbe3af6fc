#pragma once

#include "tscbench/transform.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tscbench {

enum class Binning { EquiDepth, EquiWidth };

struct SfaConfig {
  std::size_t window = 8;
  std::size_t dilation = 1;
  std::size_t word_length = 8;
  std::size_t alphabet = 2;
  Binning binning = Binning::EquiDepth;
  // Words are taken from the first-order differences of the series.
  bool use_diff = false;
  // z-normalise each window before the DFT; the DC term is then dropped.
  bool normalise = false;
};

// Position of one real-valued DFT output in the interleaved sequence
// re(0), re(1), im(1), re(2), im(2), ... (imaginary parts that are
// identically zero are skipped).
struct DftSlot {
  std::size_t frequency = 0;
  bool imaginary = false;
};

// Candidate slots of a length-w window; there are w of them with the DC term
// and w - 1 without.
std::vector<DftSlot> dft_slots(std::size_t window, bool include_dc);

// First `count` values of the interleaved DFT (sign convention e^{-2 pi i k t / w}).
std::vector<double> dft_coefficients(std::span<const double> window, std::size_t count, bool include_dc);

// a - 1 boundaries per column. A value maps to the number of boundaries it
// strictly exceeds.
std::vector<double> mcb_fit(std::span<const double> column, std::size_t alphabet, Binning strategy);
std::size_t discretise(double value, std::span<const double> boundaries);

struct SfaModel {
  SfaConfig config;
  // Selected DFT slots (ascending) and, row-major, their w basis weights.
  std::vector<DftSlot> slots;
  std::vector<double> basis;
  std::vector<std::vector<double>> boundaries;

  std::size_t dictionary_size() const;
};

// Fits an SFA model on every dilated window of the given series (already in
// the representation selected by config.use_diff): keeps the word_length
// highest-variance DFT values and learns MCB bins for each.
SfaModel sfa_fit(const SeriesMatrix& series, const SfaConfig& config);

// Word of one window; symbols packed base-a, most significant first.
std::uint32_t sfa_word(std::span<const double> window, const SfaModel& model);

struct WordBag {
  std::vector<std::uint32_t> counts;

  std::uint64_t total() const;
};

// One word per dilated window of `series`.
WordBag bag_of_words(std::span<const double> series, const SfaModel& model);

// Random dilated SFA configurations; each yields a bag over the series and a
// bag over its first differences.
class WeaselDTransform final : public FeatureTransform {
 public:
  struct Options {
    std::size_t min_configs = 120;
    std::size_t max_configs = 136;
    std::size_t min_window = 4;
    std::size_t max_window = 24;
    // Drawn uniformly per configuration. Length 8 keeps every dictionary at
    // 256 words.
    std::vector<std::size_t> word_lengths = {8};
    double normalise_probability = 0.5;
  };

  WeaselDTransform() = default;
  explicit WeaselDTransform(Options options) : options_(options) {}

  void fit(const Dataset& train, Rng& rng) override;
  Eigen::MatrixXd transform(const SeriesMatrix& series) const override;
  std::size_t num_features() const override { return num_features_; }
  std::string metadata() const override;

  // Pairs of (base, diff) models, one per configuration.
  const std::vector<std::pair<SfaModel, SfaModel>>& models() const { return models_; }

 private:
  Options options_;
  std::size_t series_length_ = 0;
  std::size_t num_features_ = 0;
  std::vector<std::pair<SfaModel, SfaModel>> models_;
};

}  // namespace tscbench
