#include "tscbench/ridge.hpp"

#include "tscbench/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tscbench {

namespace {

// Spectral decomposition of a centred design X (m x f) that yields the ridge
// fit and hat-matrix diagonal for any alpha at O(m * r) cost.
//   Gram route:    X X^T = Q diag(l) Q^T,  fitted = Q diag(l/(l+a)) Q^T y
//   Feature route: X^T X = V diag(s) V^T,  Z = X V, fitted = Z diag(1/(s+a)) Z^T y
class RidgePath {
 public:
  RidgePath(const Eigen::MatrixXd& centred, const Eigen::MatrixXd& centred_targets, RidgeRoute route)
      : m_(centred.rows()) {
    if (route == RidgeRoute::Auto) route = centred.cols() <= centred.rows() ? RidgeRoute::Feature : RidgeRoute::Gram;
    route_ = route;
    if (route_ == RidgeRoute::Gram) {
      Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(m_, m_);
      gram.selfadjointView<Eigen::Lower>().rankUpdate(centred);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram.selfadjointView<Eigen::Lower>());
      basis_ = eig.eigenvectors();
      eigenvalues_ = eig.eigenvalues().cwiseMax(0.0);
    } else {
      Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(centred.cols(), centred.cols());
      cov.selfadjointView<Eigen::Lower>().rankUpdate(centred.transpose());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov.selfadjointView<Eigen::Lower>());
      feature_vectors_ = eig.eigenvectors();
      eigenvalues_ = eig.eigenvalues().cwiseMax(0.0);
      basis_ = centred * feature_vectors_;
    }
    projected_ = basis_.transpose() * centred_targets;
    squared_basis_ = basis_.array().square().matrix();
  }

  // Per-component shrinkage applied to the projected targets.
  Eigen::VectorXd gain(double alpha) const {
    if (route_ == RidgeRoute::Gram) {
      return eigenvalues_.array() / (eigenvalues_.array() + alpha);
    }
    return (eigenvalues_.array() + alpha).inverse();
  }

  Eigen::MatrixXd loo_residuals(const Eigen::MatrixXd& centred_targets, double alpha) const {
    const Eigen::VectorXd g = gain(alpha);
    const Eigen::MatrixXd fitted = basis_ * (g.asDiagonal() * projected_);
    const Eigen::VectorXd leverage = (squared_basis_ * g).array() + 1.0 / static_cast<double>(m_);
    Eigen::MatrixXd residuals = centred_targets - fitted;
    for (Eigen::Index i = 0; i < m_; ++i) residuals.row(i) /= (1.0 - leverage(i));
    return residuals;
  }

  Eigen::MatrixXd weights(const Eigen::MatrixXd& centred, double alpha) const {
    const Eigen::VectorXd inv = (eigenvalues_.array() + alpha).inverse();
    if (route_ == RidgeRoute::Gram) {
      return centred.transpose() * (basis_ * (inv.asDiagonal() * projected_));
    }
    return feature_vectors_ * (inv.asDiagonal() * projected_);
  }

 private:
  Eigen::Index m_;
  RidgeRoute route_;
  Eigen::MatrixXd basis_;
  Eigen::MatrixXd squared_basis_;
  Eigen::MatrixXd feature_vectors_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd projected_;
};

}  // namespace

std::vector<double> default_alpha_grid() {
  std::vector<double> grid(10);
  for (int i = 0; i < 10; ++i) grid[static_cast<std::size_t>(i)] = std::pow(10.0, -3.0 + 6.0 * i / 9.0);
  return grid;
}

Standardisation standardise_in_place(Eigen::MatrixXd& x) {
  Standardisation s;
  const auto m = static_cast<double>(x.rows());
  s.mean = x.colwise().mean().transpose();
  s.scale.resize(x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    auto col = x.col(j);
    col.array() -= s.mean(j);
    const double sd = std::sqrt(col.squaredNorm() / m);
    if (sd <= 1e-12 * (1.0 + std::abs(s.mean(j)))) {
      s.scale(j) = 0.0;
      col.setZero();
    } else {
      s.scale(j) = 1.0 / sd;
      col *= s.scale(j);
    }
  }
  return s;
}

Eigen::MatrixXd one_vs_rest_targets(std::span<const int> labels, std::size_t num_classes) {
  Eigen::MatrixXd y = Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(labels.size()),
                                                static_cast<Eigen::Index>(num_classes), -1.0);
  for (std::size_t i = 0; i < labels.size(); ++i) y(static_cast<Eigen::Index>(i), labels[i]) = 1.0;
  return y;
}

Eigen::MatrixXd ridge_loo_residuals(const Eigen::MatrixXd& design, const Eigen::MatrixXd& targets, double alpha,
                                    RidgeRoute route) {
  Eigen::MatrixXd x = design.rowwise() - design.colwise().mean();
  Eigen::MatrixXd y = targets.rowwise() - targets.colwise().mean();
  return RidgePath(x, y, route).loo_residuals(y, alpha);
}

RidgeModel fit_ridge(const Eigen::MatrixXd& features, std::span<const int> labels, std::size_t num_classes,
                     std::span<const double> alpha_grid, RidgeRoute route) {
  if (features.rows() != static_cast<Eigen::Index>(labels.size())) {
    throw Error(ErrorCode::DimensionMismatch, "feature rows do not match label count");
  }
  if (features.rows() < 2 || features.cols() < 1) {
    throw Error(ErrorCode::InvalidArgument, "ridge needs at least 2 cases and 1 feature");
  }
  std::vector<std::size_t> counts(num_classes, 0);
  for (int y : labels) {
    if (y < 0 || static_cast<std::size_t>(y) >= num_classes) throw Error(ErrorCode::UnknownLabel, "label out of range");
    ++counts[static_cast<std::size_t>(y)];
  }
  if (std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; }) < 2) {
    throw Error(ErrorCode::SingleClass, "ridge needs at least two classes in the training data");
  }
  const std::vector<double> fallback = default_alpha_grid();
  if (alpha_grid.empty()) alpha_grid = fallback;

  RidgeModel model;
  Eigen::MatrixXd x = features;
  const auto st = standardise_in_place(x);
  model.feature_mean = st.mean;
  model.feature_scale = st.scale;

  const Eigen::MatrixXd targets = one_vs_rest_targets(labels, num_classes);
  const Eigen::VectorXd target_mean = targets.colwise().mean().transpose();
  const Eigen::MatrixXd centred_targets = targets.rowwise() - target_mean.transpose();

  const RidgePath path(x, centred_targets, route);
  double best = std::numeric_limits<double>::infinity();
  model.alpha = alpha_grid.back();
  for (double alpha : alpha_grid) {
    const double err = path.loo_residuals(centred_targets, alpha).squaredNorm() / static_cast<double>(x.rows());
    model.loo_errors.push_back(err);
    if (err < best) {
      best = err;
      model.alpha = alpha;
    }
  }

  model.weights = path.weights(x, model.alpha);
  model.intercepts = target_mean;
  model.raw_weights = model.feature_scale.asDiagonal() * model.weights;
  model.raw_intercepts = model.intercepts - model.raw_weights.transpose() * model.feature_mean;
  return model;
}

Eigen::MatrixXd softmax_rows(const Eigen::MatrixXd& scores) {
  Eigen::MatrixXd p(scores.rows(), scores.cols());
  for (Eigen::Index i = 0; i < scores.rows(); ++i) {
    const double top = scores.row(i).maxCoeff();
    p.row(i) = (scores.row(i).array() - top).exp();
    p.row(i) /= p.row(i).sum();
  }
  return p;
}

RidgeScores predict_scores(const RidgeModel& model, const Eigen::MatrixXd& features) {
  if (static_cast<std::size_t>(features.cols()) != model.num_features()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(model.num_features()) +
                                                  " features, got " + std::to_string(features.cols()));
  }
  RidgeScores out;
  out.scores = (features * model.raw_weights).rowwise() + model.raw_intercepts.transpose();
  out.probabilities = softmax_rows(out.scores);
  out.labels.resize(static_cast<std::size_t>(features.rows()));
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    Eigen::Index arg;
    out.scores.row(i).maxCoeff(&arg);
    out.labels[static_cast<std::size_t>(i)] = static_cast<int>(arg);
  }
  return out;
}

}  // namespace tscbench
