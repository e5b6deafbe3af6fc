#include "helpers.hpp"
#include "oracles.hpp"

#include "tscbench/error.hpp"
#include "tscbench/eval_stats.hpp"

#include <doctest.h>

#include <numeric>

using namespace tscbench;

namespace {

Eigen::MatrixXd random_proba(std::size_t m, std::size_t c, Rng& rng) {
  Eigen::MatrixXd p(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(c));
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index k = 0; k < p.cols(); ++k) p(i, k) = rng.uniform(0.01, 1.0);
    p.row(i) /= p.row(i).sum();
  }
  return p;
}

}  // namespace

TEST_SUITE("eval_stats") {

TEST_CASE("metric examples") {
  const std::vector<int> truth{0, 0, 1}, pred{0, 0, 0};
  CHECK(accuracy(truth, pred) == doctest::Approx(2.0 / 3));
  CHECK(balanced_accuracy(truth, pred, 2) == 0.5);

  Eigen::MatrixXd p(4, 2);
  p << 0.9, 0.1, 0.8, 0.2, 0.3, 0.7, 0.1, 0.9;
  const std::vector<int> t4{0, 0, 1, 1};
  const std::vector<std::size_t> counts{5, 5};
  CHECK(auroc(t4, p, counts) == 1.0);

  const Eigen::MatrixXd uniform = Eigen::MatrixXd::Constant(4, 3, 1.0 / 3);
  CHECK(negative_log_likelihood(std::vector<int>{0, 1, 2, 0}, uniform) == doctest::Approx(std::log(3.0)));
  Eigen::MatrixXd sure(1, 2);
  sure << 1.0, 0.0;
  CHECK(negative_log_likelihood(std::vector<int>{1}, sure) == doctest::Approx(-std::log(1e-16)));

  // Balanced accuracy averages over the classes that occur.
  CHECK(balanced_accuracy(std::vector<int>{0, 0, 2}, std::vector<int>{0, 1, 2}, 3) == 0.75);
}

TEST_CASE("binary AUROC") {
  CHECK(binary_auroc(std::vector<double>{0.1, 0.4, 0.35, 0.8}, {false, false, true, true}) == 0.75);
  CHECK(binary_auroc(std::vector<double>{0.5, 0.5}, {false, true}) == 0.5);
  Rng rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> s;
    std::vector<bool> pos;
    for (int i = 0; i < 25; ++i) {
      s.push_back(std::round(rng.uniform(0, 10)) / 10);
      pos.push_back(i % 3 == 0);
    }
    CHECK(binary_auroc(s, pos) == doctest::Approx(oracle::roc_area(s, pos)).epsilon(1e-12));
  }
}

TEST_CASE("weighted AUROC matches the sweep") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<int> truth{0, 1, 2, 0, 1, 2, 0, 1, 2, 0};
    const Eigen::MatrixXd p = random_proba(10, 3, rng);
    const std::vector<std::size_t> counts{7, 2, 4};
    CHECK(std::abs(auroc(truth, p, counts) - oracle::weighted_auroc(truth, p, counts)) <= 1e-9);
  }
  // Binary problems score the train minority class only.
  const std::vector<int> truth{0, 0, 1, 1, 1};
  const Eigen::MatrixXd p = random_proba(5, 2, rng);
  for (const auto& counts : {std::vector<std::size_t>{3, 8}, std::vector<std::size_t>{8, 3}, std::vector<std::size_t>{4, 4}}) {
    CHECK(std::abs(auroc(truth, p, counts) - oracle::weighted_auroc(truth, p, counts)) <= 1e-9);
  }
  // A class absent from the test set is skipped; nothing left gives 0.5.
  const std::vector<int> only0{0, 0, 0};
  CHECK(auroc(only0, random_proba(3, 3, rng), std::vector<std::size_t>{1, 1, 1}) == 0.5);
  CHECK_THROWS_AS(auroc(std::vector<int>{0, 1}, random_proba(2, 2, rng), std::vector<std::size_t>{3, 0}), Error);
}

TEST_CASE("Wilcoxon signed rank") {
  CHECK(wilcoxon_signed_rank(std::vector<double>{1, 2, 3, 4, 5}) == doctest::Approx(0.0625));
  CHECK(wilcoxon_signed_rank(std::vector<double>{-1, -2, -3, -4, -5}) == doctest::Approx(0.0625));
  CHECK(wilcoxon_signed_rank(std::vector<double>{0, 0, 0}) == 1.0);
  const std::vector<double> a{0.9, 0.8, 0.7}, b{0.9, 0.8, 0.7};
  CHECK(wilcoxon_signed_rank(a, b) == 1.0);
  CHECK_THROWS_AS(wilcoxon_signed_rank(a, std::vector<double>{1.0}), Error);

  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng.index(12);
    std::vector<double> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(std::round(rng.uniform(-4, 5)));
    const double expect = oracle::wilcoxon_by_enumeration(d);
    CHECK(std::abs(wilcoxon_signed_rank(d, WilcoxonMethod::Exact) - expect) <= 1e-12);
    std::vector<double> neg = d;
    for (auto& v : neg) v = -v;
    CHECK(std::abs(wilcoxon_signed_rank(neg) - wilcoxon_signed_rank(d)) <= 1e-12);
  }

  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> d;
    for (int i = 0; i < 25; ++i) d.push_back(rng.normal() + 0.3);
    const double exact = wilcoxon_signed_rank(d, WilcoxonMethod::Exact);
    const double normal = wilcoxon_signed_rank(d, WilcoxonMethod::Normal);
    CHECK(std::abs(exact - normal) <= 0.01);
    CHECK(wilcoxon_signed_rank(d) == exact);
  }
  std::vector<double> big;
  for (int i = 0; i < 40; ++i) big.push_back(rng.normal());
  CHECK(wilcoxon_signed_rank(big) == wilcoxon_signed_rank(big, WilcoxonMethod::Normal));
}

TEST_CASE("Holm") {
  CHECK(holm_correction(std::vector<double>{0.01, 0.04, 0.03}, 0.05) == std::vector<bool>{true, false, false});
  CHECK(holm_correction(std::vector<double>{0.01, 0.02, 0.03}, 0.05) == std::vector<bool>{true, true, true});
  CHECK(holm_correction(std::vector<double>{0.2, 0.001}, 0.05) == std::vector<bool>{false, true});
  CHECK(holm_correction(std::vector<double>{}, 0.05).empty());

  // Rejections only grow with alpha.
  Rng rng(4);
  std::vector<double> p;
  for (int i = 0; i < 15; ++i) p.push_back(std::pow(rng.uniform(0, 1), 3));
  std::size_t last = 0;
  for (double alpha : {0.001, 0.01, 0.05, 0.1, 0.5}) {
    const auto r = holm_correction(p, alpha);
    const auto n = static_cast<std::size_t>(std::count(r.begin(), r.end(), true));
    CHECK(n >= last);
    last = n;
  }
}

TEST_CASE("ranks") {
  CHECK(rank_values(std::vector<double>{0.9, 0.9, 0.8}, true) == std::vector<double>{1.5, 1.5, 3});
  CHECK(rank_values(std::vector<double>{0.2, 0.1, 0.3}, false) == std::vector<double>{2, 1, 3});
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 2 + rng.index(8);
    std::vector<double> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(std::round(rng.uniform(0, 4)));
    for (bool hib : {true, false}) {
      const auto r = rank_values(v, hib);
      CHECK(r == oracle::ranks_by_count(v, hib));
      CHECK(std::accumulate(r.begin(), r.end(), 0.0) == doctest::Approx(double(k * (k + 1)) / 2));
    }
  }
}

TEST_CASE("average ranks and cliques") {
  ComparisonMatrix cm;
  cm.classifiers = {"A", "B", "C"};
  const std::size_t d = 12;
  cm.values.resize(3, static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) {
    cm.datasets.push_back("d" + std::to_string(j));
    const auto c = static_cast<Eigen::Index>(j);
    cm.values(0, c) = 0.7;
    cm.values(1, c) = j % 2 ? 0.8 : 0.4;
    cm.values(2, c) = 0.5;
  }
  const RankSummary s = ranks_and_cliques(cm, 0.05);
  CHECK(s.average_ranks == std::vector<double>{1.5, 2.0, 2.5});
  CHECK(s.order == std::vector<std::size_t>{0, 1, 2});
  REQUIRE(s.pairwise.size() == 3);
  for (const auto& t : s.pairwise) {
    CHECK(t.rejected == (t.first != 1 && t.second != 1));
  }
  CHECK(s.cliques == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});

  CHECK(ranks_and_cliques(cm, 0.05, PairedOn::Values).cliques == s.cliques);
  ComparisonMatrix stretched = cm;
  stretched.values = cm.values.array().exp().pow(7.0).matrix();
  CHECK(ranks_and_cliques(stretched, 0.05).cliques == s.cliques);
  CHECK(parse_paired_on("values") == PairedOn::Values);
  CHECK_THROWS_AS(parse_paired_on("signs"), Error);

  // Lower is better flips the order.
  cm.higher_is_better = false;
  CHECK(ranks_and_cliques(cm, 0.05).order == std::vector<std::size_t>{2, 1, 0});

  ComparisonMatrix one = cm;
  one.values = cm.values.leftCols(1);
  one.datasets.resize(1);
  CHECK_THROWS_AS(ranks_and_cliques(one, 0.05), Error);
}

TEST_CASE("metric names") {
  for (Metric m : {Metric::Accuracy, Metric::BalancedAccuracy, Metric::Auroc, Metric::Nll}) {
    CHECK(parse_metric(to_string(m)) == m);
  }
  CHECK_FALSE(higher_is_better(Metric::Nll));
  CHECK(higher_is_better(Metric::Auroc));
  CHECK_THROWS_AS(parse_metric("f1"), Error);
}

}
