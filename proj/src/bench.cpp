#include "tscbench/bench.hpp"

#include "tscbench/classifier.hpp"
#include "tscbench/error.hpp"
#include "tscbench/parallel.hpp"
#include "tscbench/results.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <mutex>
#include <set>

namespace fs = std::filesystem;

namespace tscbench {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

std::vector<std::string> sorted_subdirs(const fs::path& dir) {
  std::vector<std::string> out;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->is_directory()) out.push_back(it->path().filename().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_complete(const fs::path& path, const std::string& classifier, const std::string& dataset,
                 std::uint64_t resample) {
  if (!fs::exists(path)) return false;
  try {
    const auto r = load_results(path);
    return r.classifier == classifier && r.dataset == dataset && r.resample_id == resample;
  } catch (const Error&) {
    return false;
  }
}

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::pair<Dataset, Dataset> load_split(const fs::path& data_dir, const std::string& name) {
  const fs::path base = data_dir / name;
  Dataset train = load_ts((base / (name + "_TRAIN.ts")).string());
  Dataset test = load_ts((base / (name + "_TEST.ts")).string());
  train.name = name;
  test.name = name;
  return {std::move(train), std::move(test)};
}

std::uint64_t classifier_seed(std::uint64_t experiment_seed, std::string_view dataset, std::uint64_t resample_id,
                              std::string_view classifier) {
  return mix64(task_seed(experiment_seed, dataset, resample_id) ^ fnv1a(classifier));
}

ResultSet run_task(const std::string& classifier, const Dataset& train, const Dataset& test,
                   std::uint64_t resample_id, std::uint64_t experiment_seed) {
  const auto [tr, te] = stratified_resample(train, test, {resample_id, experiment_seed});
  const std::uint64_t seed = classifier_seed(experiment_seed, train.name, resample_id, classifier);
  auto model = make_classifier(classifier, seed);

  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  model->fit(tr);
  const auto t1 = Clock::now();
  const Eigen::MatrixXd proba = model->predict_proba(te.series);
  const auto t2 = Clock::now();

  ResultSet r;
  r.dataset = train.name;
  r.classifier = classifier;
  r.resample_id = resample_id;
  r.timestamp = utc_timestamp();
  r.parameters = model->metadata() + ",experiment_seed=" + std::to_string(experiment_seed) +
                 ",classifier_seed=" + std::to_string(seed);
  r.train_class_counts = tr.class_counts();
  r.true_labels = te.labels;
  r.predicted.resize(te.n_cases());
  for (Eigen::Index i = 0; i < proba.rows(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index c = 1; c < proba.cols(); ++c) {
      if (proba(i, c) > proba(i, best)) best = c;
    }
    r.predicted[static_cast<std::size_t>(i)] = static_cast<int>(best);
  }
  r.probabilities = quantise_probabilities(proba);
  r.fit_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  r.predict_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  return r;
}

RunSummary run_experiment(const ExperimentPlan& plan, std::ostream* log) {
  const auto& known = registered_classifiers();
  for (const auto& c : plan.classifiers) {
    if (std::find(known.begin(), known.end(), c) == known.end()) make_classifier(c, 0);
  }

  struct Task {
    std::string classifier;
    std::string dataset;
    std::uint64_t resample;
    fs::path path;
  };
  RunSummary summary;
  std::vector<Task> pending;
  std::set<std::string> needed;
  for (const auto& c : plan.classifiers) {
    for (const auto& d : plan.datasets) {
      for (std::uint64_t r : plan.resamples) {
        auto path = results_path(plan.results_dir, c, d, r);
        if (is_complete(path, c, d, r)) {
          ++summary.skipped;
          continue;
        }
        pending.push_back({c, d, r, std::move(path)});
        needed.insert(d);
      }
    }
  }

  std::map<std::string, std::pair<Dataset, Dataset>> data;
  for (const auto& d : needed) data.emplace(d, load_split(plan.data_dir, d));

  std::mutex log_mutex;
  parallel_for(pending.size(), [&](std::size_t i) {
    const Task& t = pending[i];
    const auto& [train, test] = data.at(t.dataset);
    const ResultSet r = run_task(t.classifier, train, test, t.resample, plan.experiment_seed);
    save_results(t.path, r);
    if (log) {
      std::lock_guard lock(log_mutex);
      *log << t.classifier << ' ' << t.dataset << " resample " << t.resample << ": acc "
           << format("%.4f", accuracy(r.true_labels, r.predicted)) << ", fit " << format("%.0f", r.fit_ms)
           << " ms\n";
    }
  });
  summary.written = pending.size();
  return summary;
}

AggregateReport aggregate(const AggregateOptions& options) {
  std::vector<std::string> classifiers = options.classifiers;
  if (classifiers.empty()) {
    for (const auto& c : sorted_subdirs(options.results_dir)) {
      if (fs::is_directory(options.results_dir / c / "Predictions")) classifiers.push_back(c);
    }
  }
  std::vector<std::string> datasets = options.datasets;
  std::set<std::uint64_t> resample_set;
  {
    std::set<std::string> found;
    for (const auto& c : classifiers) {
      const fs::path pred = options.results_dir / c / "Predictions";
      for (const auto& d : sorted_subdirs(pred)) {
        found.insert(d);
        std::error_code ec;
        for (fs::directory_iterator it(pred / d, ec), end; !ec && it != end; it.increment(ec)) {
          const std::string file = it->path().filename().string();
          std::uint64_t id = 0;
          if (file.starts_with("testResample") && file.ends_with(".csv") &&
              std::sscanf(file.c_str(), "testResample%lu.csv", &id) == 1 &&
              file == "testResample" + std::to_string(id) + ".csv") {
            resample_set.insert(id);
          }
        }
      }
    }
    if (datasets.empty()) datasets.assign(found.begin(), found.end());
  }
  if (classifiers.empty() || datasets.empty() || resample_set.empty()) {
    throw Error(ErrorCode::MissingResults, "no results found under " + options.results_dir.string());
  }
  const std::vector<std::uint64_t> resamples(resample_set.begin(), resample_set.end());

  const std::size_t k = classifiers.size(), d = datasets.size();
  const std::vector<Metric> all_metrics{Metric::Accuracy, Metric::BalancedAccuracy, Metric::Auroc, Metric::Nll};
  std::vector<Eigen::MatrixXd> sums(all_metrics.size(), Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k),
                                                                              static_cast<Eigen::Index>(d)));
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::uint64_t r : resamples) {
        const auto path = results_path(options.results_dir, classifiers[i], datasets[j], r);
        const std::string cell = classifiers[i] + "/" + datasets[j] + "/resample" + std::to_string(r);
        if (!fs::exists(path)) {
          missing.push_back(cell);
          continue;
        }
        ResultSet result;
        try {
          result = load_results(path);
        } catch (const Error& e) {
          missing.push_back(cell + " (unreadable: " + e.what() + ")");
          continue;
        }
        const Metrics m = metrics(result);
        for (std::size_t q = 0; q < all_metrics.size(); ++q) {
          sums[q](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += m.get(all_metrics[q]);
        }
      }
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += "\n  " + m;
    throw Error(ErrorCode::MissingResults, std::to_string(missing.size()) + " missing result cell(s):" + list);
  }

  AggregateReport report;
  for (std::size_t q = 0; q < all_metrics.size(); ++q) {
    ComparisonMatrix cm;
    cm.classifiers = classifiers;
    cm.datasets = datasets;
    cm.values = sums[q] / static_cast<double>(resamples.size());
    cm.higher_is_better = higher_is_better(all_metrics[q]);
    report.means.push_back(std::move(cm));
  }
  report.comparison = report.means[static_cast<std::size_t>(options.metric)];
  report.summary = ranks_and_cliques(report.comparison, options.alpha, options.paired_on);

  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + options.out_dir.string() + ": " + ec.message());

  auto header = [&] {
    std::string h = "dataset";
    for (const auto& c : classifiers) h += "," + c;
    return h + "\n";
  };
  for (std::size_t q = 0; q < all_metrics.size(); ++q) {
    std::string text = header();
    for (std::size_t j = 0; j < d; ++j) {
      text += datasets[j];
      for (std::size_t i = 0; i < k; ++i) {
        text += "," + format("%.6f", report.means[q].values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      }
      text += "\n";
    }
    write_file(options.out_dir / ("mean_" + std::string(to_string(all_metrics[q])) + ".csv"), text);
  }

  const Eigen::MatrixXd ranks = report.comparison.ranks();
  std::string rank_text = header();
  for (std::size_t j = 0; j < d; ++j) {
    rank_text += datasets[j];
    for (std::size_t i = 0; i < k; ++i) {
      rank_text += "," + format("%.4f", ranks(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
    rank_text += "\n";
  }
  rank_text += "average";
  for (double r : report.summary.average_ranks) rank_text += "," + format("%.4f", r);
  write_file(options.out_dir / "ranks.csv", rank_text + "\n");

  std::string pair_text = "classifier_a,classifier_b,p_value,holm_rejected\n";
  for (const auto& t : report.summary.pairwise) {
    pair_text += classifiers[t.first] + "," + classifiers[t.second] + "," + format("%.6g", t.p_value) + "," +
                 (t.rejected ? "true" : "false") + "\n";
  }
  write_file(options.out_dir / "pairwise.csv", pair_text);

  std::string clique_text = "metric " + std::string(to_string(options.metric)) + ", alpha " +
                            format("%g", options.alpha) + ", paired on " + to_string(options.paired_on) + ", " + std::to_string(d) + " datasets, " +
                            std::to_string(resamples.size()) + " resamples\n";
  for (std::size_t i : report.summary.order) {
    clique_text += format("%.4f", report.summary.average_ranks[i]) + " " + classifiers[i] + "\n";
  }
  for (std::size_t c = 0; c < report.summary.cliques.size(); ++c) {
    clique_text += "clique " + std::to_string(c + 1) + ":";
    for (std::size_t i : report.summary.cliques[c]) clique_text += " " + classifiers[i];
    clique_text += "\n";
  }
  write_file(options.out_dir / "cliques.txt", clique_text);

  write_file(options.out_dir / "rank_diagram.svg", rank_diagram_svg(report.comparison, report.summary));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      write_file(options.out_dir / ("scatter_" + classifiers[a] + "_vs_" + classifiers[b] + ".svg"),
                 scatter_svg(report.comparison, a, b, to_string(options.metric)));
    }
  }
  return report;
}

std::string rank_diagram_svg(const ComparisonMatrix& comparison, const RankSummary& summary) {
  const std::size_t k = comparison.classifiers.size();
  const double width = 640.0, left = 160.0, right = 480.0, axis_y = 40.0;
  const double row = 22.0;
  const std::size_t half = (k + 1) / 2;
  const double height = axis_y + 30.0 + 12.0 * static_cast<double>(summary.cliques.size()) +
                        row * static_cast<double>(half) + 20.0;
  auto x_of = [&](double rank) {
    return k == 1 ? left : left + (right - left) * (rank - 1.0) / static_cast<double>(k - 1);
  };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format("%.0f", width) + "\" height=\"" +
                    format("%.0f", height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<line x1=\"" + format("%.2f", left) + "\" y1=\"" + format("%.2f", axis_y) + "\" x2=\"" +
         format("%.2f", right) + "\" y2=\"" + format("%.2f", axis_y) + "\" stroke=\"black\"/>\n";
  for (std::size_t r = 1; r <= k; ++r) {
    const double x = x_of(static_cast<double>(r));
    svg += "<line x1=\"" + format("%.2f", x) + "\" y1=\"" + format("%.2f", axis_y - 5) + "\" x2=\"" +
           format("%.2f", x) + "\" y2=\"" + format("%.2f", axis_y) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + format("%.2f", x) + "\" y=\"" + format("%.2f", axis_y - 9) +
           "\" text-anchor=\"middle\">" + std::to_string(r) + "</text>\n";
  }
  double y = axis_y + 14.0;
  for (const auto& clique : summary.cliques) {
    if (clique.size() < 2) continue;
    const double x1 = x_of(summary.average_ranks[clique.front()]) - 3.0;
    const double x2 = x_of(summary.average_ranks[clique.back()]) + 3.0;
    svg += "<line x1=\"" + format("%.2f", x1) + "\" y1=\"" + format("%.2f", y) + "\" x2=\"" + format("%.2f", x2) +
           "\" y2=\"" + format("%.2f", y) + "\" stroke=\"black\" stroke-width=\"4\"/>\n";
    y += 12.0;
  }
  const double label_top = axis_y + 30.0 + 12.0 * static_cast<double>(summary.cliques.size());
  for (std::size_t pos = 0; pos < k; ++pos) {
    const std::size_t i = summary.order[pos];
    const double rank = summary.average_ranks[i];
    const double x = x_of(rank);
    const bool on_left = pos < half;
    const std::size_t slot = on_left ? pos : k - 1 - pos;
    const double ly = label_top + row * static_cast<double>(slot);
    const double lx = on_left ? left - 10.0 : right + 10.0;
    svg += "<polyline fill=\"none\" stroke=\"black\" points=\"" + format("%.2f", x) + "," + format("%.2f", axis_y) +
           " " + format("%.2f", x) + "," + format("%.2f", ly) + " " + format("%.2f", lx) + "," + format("%.2f", ly) +
           "\"/>\n";
    svg += "<text x=\"" + format("%.2f", on_left ? lx - 4.0 : lx + 4.0) + "\" y=\"" + format("%.2f", ly + 4.0) +
           "\" text-anchor=\"" + (on_left ? "end" : "start") + "\">" + escape_xml(comparison.classifiers[i]) + " (" +
           format("%.3f", rank) + ")</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string scatter_svg(const ComparisonMatrix& comparison, std::size_t x, std::size_t y, std::string_view metric) {
  const double size = 400.0, margin = 50.0, span = size - 2 * margin;
  const Eigen::VectorXd a = comparison.values.row(static_cast<Eigen::Index>(x)).transpose();
  const Eigen::VectorXd b = comparison.values.row(static_cast<Eigen::Index>(y)).transpose();
  double lo = std::min(a.minCoeff(), b.minCoeff());
  double hi = std::max(a.maxCoeff(), b.maxCoeff());
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  auto px = [&](double v) { return margin + span * (v - lo) / (hi - lo); };
  auto py = [&](double v) { return size - margin - span * (v - lo) / (hi - lo); };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
                    "font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect x=\"" + format("%.2f", margin) + "\" y=\"" + format("%.2f", margin) + "\" width=\"" +
         format("%.2f", span) + "\" height=\"" + format("%.2f", span) + "\" fill=\"none\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + format("%.2f", px(lo)) + "\" y1=\"" + format("%.2f", py(lo)) + "\" x2=\"" +
         format("%.2f", px(hi)) + "\" y2=\"" + format("%.2f", py(hi)) + "\" stroke=\"grey\" stroke-dasharray=\"4\"/>\n";
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    svg += "<circle cx=\"" + format("%.2f", px(a(j))) + "\" cy=\"" + format("%.2f", py(b(j))) +
           "\" r=\"3\" fill=\"steelblue\"><title>" + escape_xml(comparison.datasets[static_cast<std::size_t>(j)]) +
           "</title></circle>\n";
  }
  svg += "<text x=\"200\" y=\"" + format("%.2f", size - 15) + "\" text-anchor=\"middle\">" +
         escape_xml(comparison.classifiers[x]) + " " + escape_xml(metric) + "</text>\n";
  svg += "<text x=\"15\" y=\"200\" text-anchor=\"middle\" transform=\"rotate(-90 15 200)\">" +
         escape_xml(comparison.classifiers[y]) + " " + escape_xml(metric) + "</text>\n";
  svg += "<text x=\"" + format("%.2f", margin) + "\" y=\"" + format("%.2f", size - margin + 15) + "\">" +
         format("%.3f", lo) + "</text>\n";
  svg += "<text x=\"" + format("%.2f", size - margin) + "\" y=\"" + format("%.2f", size - margin + 15) +
         "\" text-anchor=\"end\">" + format("%.3f", hi) + "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace tscbench
