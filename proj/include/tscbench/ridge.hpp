#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace tscbench {

// One-vs-rest ridge classifier over standardised features, with the
// regularisation strength picked by closed-form leave-one-out error.
struct RidgeModel {
  // f x c weights in standardised feature space, and per-class intercepts.
  Eigen::MatrixXd weights;
  Eigen::VectorXd intercepts;
  // Column means and reciprocal stds; zero-variance columns get scale 0.
  Eigen::VectorXd feature_mean;
  Eigen::VectorXd feature_scale;
  double alpha = 1.0;
  // Mean LOO squared error for each grid value, in grid order.
  std::vector<double> loo_errors;

  // Same decision function folded into raw feature space.
  Eigen::MatrixXd raw_weights;
  Eigen::VectorXd raw_intercepts;

  std::size_t num_features() const { return static_cast<std::size_t>(weights.rows()); }
  std::size_t num_classes() const { return static_cast<std::size_t>(weights.cols()); }
};

// 10 log-spaced values in [1e-3, 1e3].
std::vector<double> default_alpha_grid();

enum class RidgeRoute { Auto, Gram, Feature };

RidgeModel fit_ridge(const Eigen::MatrixXd& features, std::span<const int> labels, std::size_t num_classes,
                     std::span<const double> alpha_grid = {}, RidgeRoute route = RidgeRoute::Auto);

struct RidgeScores {
  Eigen::MatrixXd scores;  // m x c
  std::vector<int> labels;
  Eigen::MatrixXd probabilities;
};

RidgeScores predict_scores(const RidgeModel& model, const Eigen::MatrixXd& features);

// Row-wise softmax.
Eigen::MatrixXd softmax_rows(const Eigen::MatrixXd& scores);

// Column standardisation used by fit_ridge: zero-variance columns become zeros.
struct Standardisation {
  Eigen::VectorXd mean;
  Eigen::VectorXd scale;
};
Standardisation standardise_in_place(Eigen::MatrixXd& features);

// {-1,+1} one-vs-rest targets.
Eigen::MatrixXd one_vs_rest_targets(std::span<const int> labels, std::size_t num_classes);

// LOO residuals y_i - yhat_{-i} of ridge with an unpenalised intercept on a
// fixed design, via the hat-matrix identity e_i / (1 - h_ii).
Eigen::MatrixXd ridge_loo_residuals(const Eigen::MatrixXd& design, const Eigen::MatrixXd& targets, double alpha,
                                    RidgeRoute route = RidgeRoute::Auto);

}  // namespace tscbench
