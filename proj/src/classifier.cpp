#include "tscbench/classifier.hpp"

#include "tscbench/convolution.hpp"
#include "tscbench/dictionary.hpp"
#include "tscbench/error.hpp"
#include "tscbench/parallel.hpp"
#include "tscbench/shapelet.hpp"

#include <algorithm>

namespace tscbench {

std::vector<int> Classifier::predict(const SeriesMatrix& series) const {
  const Eigen::MatrixXd proba = predict_proba(series);
  std::vector<int> out(static_cast<std::size_t>(proba.rows()));
  for (Eigen::Index i = 0; i < proba.rows(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index c = 1; c < proba.cols(); ++c) {
      if (proba(i, c) > proba(i, best)) best = c;
    }
    out[static_cast<std::size_t>(i)] = static_cast<int>(best);
  }
  return out;
}

TransformRidgeClassifier::TransformRidgeClassifier(std::string name,
                                                   std::vector<std::unique_ptr<FeatureTransform>> transforms,
                                                   std::uint64_t seed)
    : name_(std::move(name)), transforms_(std::move(transforms)), seed_(seed) {
  if (transforms_.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one transform");
}

void TransformRidgeClassifier::fit(const Dataset& train) {
  train.validate();
  Rng rng(seed_);
  std::vector<Eigen::MatrixXd> blocks;
  Eigen::Index width = 0;
  for (auto& t : transforms_) {
    blocks.push_back(t->fit_transform(train, rng));
    width += blocks.back().cols();
  }
  if (blocks.size() == 1) {
    ridge_ = fit_ridge(blocks.front(), train.labels, train.num_classes());
    return;
  }
  Eigen::MatrixXd x(static_cast<Eigen::Index>(train.n_cases()), width);
  Eigen::Index col = 0;
  for (auto& b : blocks) {
    x.middleCols(col, b.cols()) = b;
    col += b.cols();
    b.resize(0, 0);
  }
  ridge_ = fit_ridge(x, train.labels, train.num_classes());
}

Eigen::MatrixXd TransformRidgeClassifier::features(const SeriesMatrix& series) const {
  if (transforms_.size() == 1) return transforms_.front()->transform(series);
  Eigen::Index width = 0;
  for (const auto& t : transforms_) width += static_cast<Eigen::Index>(t->num_features());
  Eigen::MatrixXd x(series.rows(), width);
  Eigen::Index col = 0;
  for (const auto& t : transforms_) {
    const Eigen::MatrixXd b = t->transform(series);
    x.middleCols(col, b.cols()) = b;
    col += b.cols();
  }
  return x;
}

Eigen::MatrixXd TransformRidgeClassifier::predict_proba(const SeriesMatrix& series) const {
  Eigen::MatrixXd out(series.rows(), static_cast<Eigen::Index>(ridge_.num_classes()));
  for (Eigen::Index first = 0; first < series.rows(); first += kPredictChunk) {
    const Eigen::Index rows = std::min<Eigen::Index>(kPredictChunk, series.rows() - first);
    const SeriesMatrix chunk = series.middleRows(first, rows);
    out.middleRows(first, rows) = predict_scores(ridge_, features(chunk)).probabilities;
  }
  return out;
}

std::string TransformRidgeClassifier::metadata() const {
  std::string out;
  for (const auto& t : transforms_) {
    if (!out.empty()) out += ',';
    out += t->metadata();
  }
  out += ",head=ridge_ovr,standardise=true,alpha_grid=logspace(-3|3|10),alpha=" + std::to_string(ridge_.alpha) +
         ",alpha_selection=loo_mse,probabilities=softmax";
  return out;
}

void Nn1DtwClassifier::fit(const Dataset& train) {
  train.validate();
  model_ = nn1_fit(train);
}

Eigen::MatrixXd Nn1DtwClassifier::predict_proba(const SeriesMatrix& series) const {
  if (series.cols() != model_.train.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "1NN-DTW fitted on a different series length");
  }
  const auto n = static_cast<std::size_t>(series.cols());
  Eigen::MatrixXd out(series.rows(), static_cast<Eigen::Index>(model_.num_classes));
  parallel_for(static_cast<std::size_t>(series.rows()), [&](std::size_t i) {
    const auto p = nn1_classify(model_, {series.data() + i * n, n});
    for (std::size_t c = 0; c < p.probabilities.size(); ++c) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = p.probabilities[c];
    }
  });
  return out;
}

std::string Nn1DtwClassifier::metadata() const {
  return "distance=dtw,window=full,cost=squared,neighbours=1,tie_break=lowest_train_index";
}

void IntervalForestClassifier::fit(const Dataset& train) {
  Rng rng(seed_);
  forest_.fit(train, rng);
}

Eigen::MatrixXd IntervalForestClassifier::predict_proba(const SeriesMatrix& series) const {
  return forest_.predict_proba(series);
}

std::string IntervalForestClassifier::metadata() const { return forest_.metadata(); }

const std::vector<std::string>& registered_classifiers() {
  static const std::vector<std::string> names{"1nn-dtw", "rocket", "minirocket", "multirocket", "hydra",
                                              "hydra-mr", "weasel-d", "rdst",       "tsf",         "drcif"};
  return names;
}

std::unique_ptr<Classifier> make_classifier(std::string_view name, std::uint64_t seed) {
  using Transforms = std::vector<std::unique_ptr<FeatureTransform>>;
  auto ridge = [&](auto... transforms) {
    Transforms list;
    (list.push_back(std::move(transforms)), ...);
    return std::make_unique<TransformRidgeClassifier>(std::string(name), std::move(list), seed);
  };
  if (name == "1nn-dtw") return std::make_unique<Nn1DtwClassifier>();
  if (name == "rocket") return ridge(std::make_unique<RocketTransform>());
  if (name == "minirocket") return ridge(std::make_unique<MiniRocketTransform>());
  if (name == "multirocket") return ridge(std::make_unique<MultiRocketTransform>());
  if (name == "hydra") return ridge(std::make_unique<HydraTransform>());
  if (name == "hydra-mr") return ridge(std::make_unique<HydraTransform>(), std::make_unique<MultiRocketTransform>());
  if (name == "weasel-d") return ridge(std::make_unique<WeaselDTransform>());
  if (name == "rdst") return ridge(std::make_unique<RdstTransform>());
  if (name == "tsf") {
    IntervalForestOptions options;
    options.variant = IntervalForestOptions::Variant::Tsf;
    return std::make_unique<IntervalForestClassifier>("tsf", options, seed);
  }
  if (name == "drcif") return std::make_unique<IntervalForestClassifier>("drcif", IntervalForestOptions{}, seed);

  std::string known;
  for (const auto& n : registered_classifiers()) known += (known.empty() ? "" : ", ") + n;
  throw Error(ErrorCode::UnknownClassifier, "unknown classifier '" + std::string(name) + "'; registered: " + known);
}

}  // namespace tscbench
