#include "tscbench/bench.hpp"
#include "tscbench/classifier.hpp"
#include "tscbench/error.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>

namespace {

// Accepts "a..b", comma lists, or a mix: "0..4,7".
std::vector<std::uint64_t> parse_resamples(const std::string& text) {
  std::vector<std::uint64_t> out;
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw CLI::ValidationError("--resamples", "bad resample id '" + std::string(s) + "'");
    }
    return v;
  };
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(number(item));
      continue;
    }
    const auto lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("--resamples", "empty range '" + std::string(item) + "'");
    for (auto r = lo; r <= hi; ++r) out.push_back(r);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time series classification benchmark"};
  app.require_subcommand(1);

  tscbench::ExperimentPlan plan;
  std::string resamples = "0";
  auto* run = app.add_subcommand("run", "Run (classifier x dataset x resample) experiments");
  run->add_option("--data-dir", plan.data_dir, "Directory holding <name>/<name>_TRAIN.ts and _TEST.ts")->required();
  run->add_option("--results-dir", plan.results_dir, "Output directory for results files")->required();
  run->add_option("--classifier", plan.classifiers, "Classifier name (repeatable)")->required();
  run->add_option("--dataset", plan.datasets, "Dataset name (repeatable)")->required();
  run->add_option("--resamples", resamples, "Resample ids, e.g. 0..29");
  run->add_option("--seed", plan.experiment_seed, "Experiment seed");

  tscbench::AggregateOptions agg;
  std::string metric = "acc";
  auto* aggregate = app.add_subcommand("aggregate", "Summarise a complete results grid");
  aggregate->add_option("--results-dir", agg.results_dir, "Results directory")->required();
  aggregate->add_option("--out", agg.out_dir, "Report directory")->required();
  aggregate->add_option("--metric", metric, "acc, balacc, auroc or nll")
      ->check(CLI::IsMember({"acc", "balacc", "auroc", "nll"}));
  aggregate->add_option("--alpha", agg.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
  std::string paired = "ranks";
  aggregate->add_option("--paired-on", paired, "Wilcoxon pairs: ranks or values")
      ->check(CLI::IsMember({"ranks", "values"}));
  aggregate->add_option("--classifier", agg.classifiers, "Restrict to these classifiers");
  aggregate->add_option("--dataset", agg.datasets, "Restrict to these datasets");

  auto* list = app.add_subcommand("list-classifiers", "Print the registered classifier names");

  try {
    app.parse(argc, argv);
    if (*run) plan.resamples = parse_resamples(resamples);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*list) {
      for (const auto& name : tscbench::registered_classifiers()) std::cout << name << '\n';
    } else if (*run) {
      const auto summary = tscbench::run_experiment(plan, &std::cerr);
      std::cout << summary.written << " written, " << summary.skipped << " already complete\n";
    } else if (*aggregate) {
      agg.metric = tscbench::parse_metric(metric);
      agg.paired_on = tscbench::parse_paired_on(paired);
      const auto report = tscbench::aggregate(agg);
      for (std::size_t i : report.summary.order) {
        std::cout << report.summary.average_ranks[i] << ' ' << report.comparison.classifiers[i] << '\n';
      }
    }
  } catch (const tscbench::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool usage = e.code() == tscbench::ErrorCode::UnknownClassifier ||
                       e.code() == tscbench::ErrorCode::InvalidArgument;
    return usage ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
