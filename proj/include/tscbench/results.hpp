#pragma once

#include "tscbench/eval_stats.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace tscbench {

// Rounds each row to multiples of 1e-6 that sum to exactly 1e6 units; the
// largest entry absorbs the rounding residue.
Eigen::MatrixXd quantise_probabilities(const Eigen::MatrixXd& probabilities);

// Text form of a result:
//   dataset,classifier,resample_id,timestamp
//   parameters,train_class_counts=a|b|...
//   accuracy,fit_ms,predict_ms
//   true,pred,,p_0,...,p_{c-1}      (one line per test case)
std::string write_results(const ResultSet& result);
// Throws BadValue on malformed text.
ResultSet parse_results(std::string_view text);

std::filesystem::path results_path(const std::filesystem::path& results_dir, std::string_view classifier,
                                   std::string_view dataset, std::uint64_t resample_id);

// Writes through a temporary file in the same directory, then renames.
void save_results(const std::filesystem::path& path, const ResultSet& result);
ResultSet load_results(const std::filesystem::path& path);

}  // namespace tscbench
