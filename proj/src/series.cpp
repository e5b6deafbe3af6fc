#include "tscbench/series.hpp"

#include "tscbench/error.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <string>

namespace tscbench {

double mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double population_std(std::span<const double> x) {
  const double mu = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(x.size()));
}

void znorm_into(std::span<const double> x, std::span<double> out) {
  const double mu = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - mu) * (v - mu);
  const double sd = std::sqrt(ss / static_cast<double>(x.size()));
  if (sd <= kConstantTolerance * (1.0 + std::abs(mu))) {
    for (auto& v : out) v = 0.0;
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - mu) / sd;
}

Series znorm(std::span<const double> x) {
  Series out(x.size());
  if (!x.empty()) znorm_into(x, out);
  return out;
}

Series first_difference(std::span<const double> x) {
  if (x.size() < 2) throw Error(ErrorCode::SeriesTooShort, "first difference needs at least 2 values");
  Series out(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) out[i] = x[i + 1] - x[i];
  return out;
}

Series periodogram(std::span<const double> x) {
  if (x.size() < 2) throw Error(ErrorCode::SeriesTooShort, "periodogram needs at least 2 values");
  Eigen::FFT<double> fft;
  std::vector<double> in(x.begin(), x.end());
  std::vector<std::complex<double>> spectrum;
  fft.fwd(spectrum, in);
  Series out(x.size() / 2);
  for (std::size_t k = 1; k <= out.size(); ++k) out[k - 1] = std::norm(spectrum[k]);
  return out;
}

std::size_t window_count(std::size_t n, std::size_t length, std::size_t dilation) {
  if (length == 0 || dilation == 0) return 0;
  const std::size_t span = (length - 1) * dilation;
  return span >= n ? 0 : n - span;
}

std::vector<Series> dilated_windows(std::span<const double> x, std::size_t length, std::size_t dilation) {
  if (length == 0 || dilation == 0) {
    throw Error(ErrorCode::InvalidArgument, "window length and dilation must be positive");
  }
  const std::size_t count = window_count(x.size(), length, dilation);
  if (count == 0) {
    throw Error(ErrorCode::SeriesTooShort, "window of length " + std::to_string(length) + " and dilation " +
                                               std::to_string(dilation) + " does not fit a series of length " +
                                               std::to_string(x.size()));
  }
  std::vector<Series> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(extract_window(x, {i, length, dilation}));
  return out;
}

Series extract_window(std::span<const double> x, const Window& w) {
  if (!w.fits(x.size())) throw Error(ErrorCode::InvalidArgument, "window does not fit series");
  Series out(w.length);
  for (std::size_t j = 0; j < w.length; ++j) out[j] = x[w.offset + j * w.dilation];
  return out;
}

}  // namespace tscbench
