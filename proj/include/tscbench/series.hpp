#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tscbench {

using Series = std::vector<double>;

// A dilated subseries: values at offset, offset + d, ..., offset + (length-1)*d.
// Offsets are 0-based here.
struct Window {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t dilation = 1;

  std::size_t last_index() const { return offset + (length - 1) * dilation; }
  bool fits(std::size_t series_length) const {
    return length >= 1 && dilation >= 1 && last_index() < series_length;
  }
};

// Threshold below which a window's standard deviation counts as zero.
inline constexpr double kConstantTolerance = 1e-12;

double mean(std::span<const double> x);
// Population (1/n) standard deviation.
double population_std(std::span<const double> x);

// Zero mean, unit population std; constant input maps to zeros.
Series znorm(std::span<const double> x);
void znorm_into(std::span<const double> x, std::span<double> out);

// out[i] = x[i+1] - x[i]; requires n >= 2.
Series first_difference(std::span<const double> x);

// Squared DFT magnitudes for frequencies 1..floor(n/2); requires n >= 2.
Series periodogram(std::span<const double> x);

// Number of dilated windows of (length, dilation) in a series of length n,
// zero when none fits.
std::size_t window_count(std::size_t n, std::size_t length, std::size_t dilation);

// All n - (l-1)d dilated windows in offset order.
std::vector<Series> dilated_windows(std::span<const double> x, std::size_t length, std::size_t dilation);

// Values of one window.
Series extract_window(std::span<const double> x, const Window& w);

}  // namespace tscbench
