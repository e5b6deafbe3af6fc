#pragma once

#include "tscbench/dataset.hpp"
#include "tscbench/dtw.hpp"
#include "tscbench/interval_forest.hpp"
#include "tscbench/ridge.hpp"
#include "tscbench/transform.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tscbench {

class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual std::string name() const = 0;
  virtual void fit(const Dataset& train) = 0;
  // One row per series, one column per class; rows sum to 1.
  virtual Eigen::MatrixXd predict_proba(const SeriesMatrix& series) const = 0;
  // key=value pairs joined by ','.
  virtual std::string metadata() const = 0;

  // Argmax of predict_proba, ties to the lowest class index.
  std::vector<int> predict(const SeriesMatrix& series) const;
};

// Concatenated transforms followed by the ridge head.
class TransformRidgeClassifier final : public Classifier {
 public:
  TransformRidgeClassifier(std::string name, std::vector<std::unique_ptr<FeatureTransform>> transforms,
                           std::uint64_t seed);

  std::string name() const override { return name_; }
  void fit(const Dataset& train) override;
  Eigen::MatrixXd predict_proba(const SeriesMatrix& series) const override;
  std::string metadata() const override;

  const RidgeModel& ridge() const { return ridge_; }
  const std::vector<std::unique_ptr<FeatureTransform>>& transforms() const { return transforms_; }
  Eigen::MatrixXd features(const SeriesMatrix& series) const;

  // Rows transformed per batch at prediction time.
  static constexpr std::size_t kPredictChunk = 256;

 private:
  std::string name_;
  std::vector<std::unique_ptr<FeatureTransform>> transforms_;
  std::uint64_t seed_;
  RidgeModel ridge_;
};

class Nn1DtwClassifier final : public Classifier {
 public:
  std::string name() const override { return "1nn-dtw"; }
  void fit(const Dataset& train) override;
  Eigen::MatrixXd predict_proba(const SeriesMatrix& series) const override;
  std::string metadata() const override;

 private:
  Nn1Model model_;
};

class IntervalForestClassifier final : public Classifier {
 public:
  IntervalForestClassifier(std::string name, IntervalForestOptions options, std::uint64_t seed)
      : name_(std::move(name)), forest_(options), seed_(seed) {}

  std::string name() const override { return name_; }
  void fit(const Dataset& train) override;
  Eigen::MatrixXd predict_proba(const SeriesMatrix& series) const override;
  std::string metadata() const override;

  const IntervalForest& forest() const { return forest_; }

 private:
  std::string name_;
  IntervalForest forest_;
  std::uint64_t seed_;
};

const std::vector<std::string>& registered_classifiers();

// Throws UnknownClassifier, listing the registered names.
std::unique_ptr<Classifier> make_classifier(std::string_view name, std::uint64_t seed);

}  // namespace tscbench
