#pragma once

#include "tscbench/dataset.hpp"
#include "tscbench/rng.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace testutil {

inline std::string data_path(const std::string& name) { return std::string(TSCBENCH_DATA_DIR) + "/" + name; }

inline std::vector<double> random_series(std::size_t n, tscbench::Rng& rng) {
  std::vector<double> x(n);
  for (auto& v : x) v = rng.normal();
  return x;
}

// Noise plus a class-specific bump of the given height at a fixed place.
inline tscbench::Dataset bump_dataset(std::size_t m, std::size_t n, std::size_t classes, std::uint64_t seed,
                                      double height = 3.0, double noise = 1.0) {
  tscbench::Rng rng(seed);
  tscbench::Dataset d;
  d.name = "Bumps";
  for (std::size_t c = 0; c < classes; ++c) d.class_names.push_back("c" + std::to_string(c));
  d.series.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < m; ++i) {
    const auto c = static_cast<int>(i % classes);
    d.labels.push_back(c);
    const std::size_t centre = (static_cast<std::size_t>(c) + 1) * n / (classes + 1);
    for (std::size_t t = 0; t < n; ++t) {
      const double dt = (static_cast<double>(t) - static_cast<double>(centre)) / 3.0;
      d.series(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t)) =
          noise * rng.normal() + height * std::exp(-dt * dt);
    }
  }
  return d;
}

}  // namespace testutil
