#pragma once

#include "tscbench/dataset.hpp"
#include "tscbench/eval_stats.hpp"

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace tscbench {

struct ExperimentPlan {
  std::filesystem::path data_dir;
  std::vector<std::string> datasets;
  std::vector<std::string> classifiers;
  std::vector<std::uint64_t> resamples;
  std::uint64_t experiment_seed = 0;
  std::filesystem::path results_dir;
};

struct RunSummary {
  std::size_t written = 0;
  std::size_t skipped = 0;
};

// Loads `<dir>/<name>/<name>_TRAIN.ts` and `_TEST.ts`.
std::pair<Dataset, Dataset> load_split(const std::filesystem::path& data_dir, const std::string& name);

// Seed handed to a classifier for one task.
std::uint64_t classifier_seed(std::uint64_t experiment_seed, std::string_view dataset, std::uint64_t resample_id,
                              std::string_view classifier);

// Fits on the resampled train split and scores the test split.
ResultSet run_task(const std::string& classifier, const Dataset& train, const Dataset& test,
                   std::uint64_t resample_id, std::uint64_t experiment_seed);

// One results file per (classifier, dataset, resample). Existing files that
// parse are kept; anything else is (re)computed. Tasks run on the worker pool.
RunSummary run_experiment(const ExperimentPlan& plan, std::ostream* log = nullptr);

struct AggregateOptions {
  std::filesystem::path results_dir;
  std::filesystem::path out_dir;
  // Empty lists mean everything found under results_dir.
  std::vector<std::string> classifiers;
  std::vector<std::string> datasets;
  Metric metric = Metric::Accuracy;
  double alpha = 0.05;
  PairedOn paired_on = PairedOn::Ranks;
};

struct AggregateReport {
  // One matrix per metric, indexed by static_cast<int>(Metric).
  std::vector<ComparisonMatrix> means;
  ComparisonMatrix comparison;  // the selected metric
  RankSummary summary;
};

// Reads the full (classifier, dataset, resample) grid, throwing
// MissingResults that names every absent cell, then writes mean_<metric>.csv,
// ranks.csv, pairwise.csv, cliques.txt, rank_diagram.svg and one scatter
// plot per classifier pair into out_dir.
AggregateReport aggregate(const AggregateOptions& options);

// Static plots.
std::string rank_diagram_svg(const ComparisonMatrix& comparison, const RankSummary& summary);
std::string scatter_svg(const ComparisonMatrix& comparison, std::size_t x, std::size_t y, std::string_view metric);

}  // namespace tscbench
