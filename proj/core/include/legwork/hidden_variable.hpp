#pragma once

// Classical (macrorealist) side of the inequality: hidden-variable models
// over a finite state space, the exact three-variable joints they induce,
// and the entropic LG combination that must stay non-positive for them.

#include <array>
#include <cstdint>

#include "legwork/entropy.hpp"

namespace legwork {

/// Exact joint distribution of three variables on a common d-letter
/// alphabet, stored flat in row-major order: index (x1 * d + x2) * d + x3.
class TripleJoint {
 public:
  TripleJoint(std::vector<double> p, Eigen::Index d);

  Eigen::Index dim() const noexcept { return d_; }
  double operator()(Eigen::Index x1, Eigen::Index x2, Eigen::Index x3) const {
    return p_[static_cast<std::size_t>((x1 * d_ + x2) * d_ + x3)];
  }
  const std::vector<double>& flat() const noexcept { return p_; }

  JointTable pair_12() const;  // marginal over x3
  JointTable pair_23() const;  // marginal over x1
  JointTable pair_13() const;  // marginal over x2

  /// x1 against the composite outcome (x2, x3); used for conditioning-on-more
  /// checks, with the composite index x2 * d + x3 along columns.
  JointTable pair_1_23() const;

 private:
  std::vector<double> p_;
  Eigen::Index d_;
};

/// Convex mixture of product behaviours: weights over L hidden states and,
/// for each of the three times, an L x d table of outcome probabilities
/// (one row per hidden state).
class HiddenVariableModel {
 public:
  HiddenVariableModel(ProbVector weights,
                      std::array<Eigen::MatrixXd, 3> conditionals);

  Eigen::Index states() const noexcept { return weights_.size(); }
  Eigen::Index dim() const noexcept { return conditionals_[0].cols(); }
  const ProbVector& weights() const noexcept { return weights_; }
  const Eigen::MatrixXd& conditional(int i) const { return conditionals_.at(i); }

 private:
  ProbVector weights_;
  std::array<Eigen::MatrixXd, 3> conditionals_;
};

/// p(x1,x2,x3) = sum_lambda w(lambda) P(x1|lambda) P(x2|lambda) P(x3|lambda).
TripleJoint joint_from_model(const HiddenVariableModel& m);

/// C_alpha = H(X1,X3) + H(X2) - H(X2,X3) - H(X1,X2) on the model's joint;
/// every macrorealist model obeys C_alpha <= 0 for alpha >= 1.
double lg_check(const HiddenVariableModel& m, EntropicOrder order);

/// Uniform-simplex random model (normalized exponential variates), fully
/// determined by the seed.
HiddenVariableModel random_model(std::uint64_t seed, Eigen::Index d,
                                 Eigen::Index l);

/// Stateless per-task seed stream: mixes a task index into a master seed so
/// that parallel and serial fuzzing enumerate identical models.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace legwork
