#include "legwork/hidden_variable.hpp"

#include <cmath>
#include <random>

namespace legwork {

TripleJoint::TripleJoint(std::vector<double> p, Eigen::Index d)
    : p_(std::move(p)), d_(d) {
  if (d_ < 1 || static_cast<Eigen::Index>(p_.size()) != d_ * d_ * d_) {
    throw std::invalid_argument("TripleJoint: need d^3 entries");
  }
  detail::validate_distribution(p_.data(),
                                static_cast<Eigen::Index>(p_.size()),
                                "TripleJoint");
}

JointTable TripleJoint::pair_12() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d_, d_);
  for (Eigen::Index x1 = 0; x1 < d_; ++x1)
    for (Eigen::Index x2 = 0; x2 < d_; ++x2)
      for (Eigen::Index x3 = 0; x3 < d_; ++x3)
        m(x1, x2) += (*this)(x1, x2, x3);
  return JointTable(std::move(m));
}

JointTable TripleJoint::pair_23() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d_, d_);
  for (Eigen::Index x1 = 0; x1 < d_; ++x1)
    for (Eigen::Index x2 = 0; x2 < d_; ++x2)
      for (Eigen::Index x3 = 0; x3 < d_; ++x3)
        m(x2, x3) += (*this)(x1, x2, x3);
  return JointTable(std::move(m));
}

JointTable TripleJoint::pair_13() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d_, d_);
  for (Eigen::Index x1 = 0; x1 < d_; ++x1)
    for (Eigen::Index x2 = 0; x2 < d_; ++x2)
      for (Eigen::Index x3 = 0; x3 < d_; ++x3)
        m(x1, x3) += (*this)(x1, x2, x3);
  return JointTable(std::move(m));
}

JointTable TripleJoint::pair_1_23() const {
  Eigen::MatrixXd m(d_, d_ * d_);
  for (Eigen::Index x1 = 0; x1 < d_; ++x1)
    for (Eigen::Index x2 = 0; x2 < d_; ++x2)
      for (Eigen::Index x3 = 0; x3 < d_; ++x3)
        m(x1, x2 * d_ + x3) = (*this)(x1, x2, x3);
  return JointTable(std::move(m));
}

HiddenVariableModel::HiddenVariableModel(
    ProbVector weights, std::array<Eigen::MatrixXd, 3> conditionals)
    : weights_(std::move(weights)), conditionals_(std::move(conditionals)) {
  const Eigen::Index l = weights_.size();
  const Eigen::Index d = conditionals_[0].cols();
  if (d < 2) {
    throw std::invalid_argument("HiddenVariableModel: need d >= 2 outcomes");
  }
  for (const Eigen::MatrixXd& c : conditionals_) {
    if (c.rows() != l || c.cols() != d) {
      throw std::invalid_argument("HiddenVariableModel: conditional shape mismatch");
    }
    for (Eigen::Index row = 0; row < l; ++row) {
      Eigen::VectorXd r = c.row(row).transpose();
      detail::validate_distribution(r.data(), r.size(),
                                    "HiddenVariableModel conditional row");
    }
  }
}

TripleJoint joint_from_model(const HiddenVariableModel& m) {
  const Eigen::Index d = m.dim();
  const Eigen::Index l = m.states();
  std::vector<double> p(static_cast<std::size_t>(d * d * d), 0.0);
  for (Eigen::Index lam = 0; lam < l; ++lam) {
    const double w = m.weights()[lam];
    if (w <= 0.0) continue;
    for (Eigen::Index x1 = 0; x1 < d; ++x1) {
      const double w1 = w * m.conditional(0)(lam, x1);
      for (Eigen::Index x2 = 0; x2 < d; ++x2) {
        const double w12 = w1 * m.conditional(1)(lam, x2);
        for (Eigen::Index x3 = 0; x3 < d; ++x3) {
          p[static_cast<std::size_t>((x1 * d + x2) * d + x3)] +=
              w12 * m.conditional(2)(lam, x3);
        }
      }
    }
  }
  return TripleJoint(std::move(p), d);
}

double lg_check(const HiddenVariableModel& m, EntropicOrder order) {
  if (order.alpha() < 1.0 && !order.is_shannon()) {
    throw std::invalid_argument("lg_check: requires alpha >= 1");
  }
  const TripleJoint joint = joint_from_model(m);
  const JointTable j12 = joint.pair_12();
  const JointTable j23 = joint.pair_23();
  const JointTable j13 = joint.pair_13();
  const double h_x2 = tsallis_entropy(j12.col_marginal(), order);
  return joint_entropy(j13, order) + h_x2 - joint_entropy(j23, order) -
         joint_entropy(j12, order);
}

namespace {

// splitmix64 finalizer; the standard constants.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits of an engine draw.
double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Flat-Dirichlet simplex point: normalized exponential variates.
Eigen::VectorXd simplex_sample(std::mt19937_64& eng, Eigen::Index n) {
  Eigen::VectorXd v(n);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = -std::log1p(-uniform01(eng));
    sum += v(i);
  }
  if (sum <= 0.0) return Eigen::VectorXd::Constant(n, 1.0 / n);
  return v / sum;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + 0x9E3779B97F4A7C15ull * (index + 1));
}

HiddenVariableModel random_model(std::uint64_t seed, Eigen::Index d,
                                 Eigen::Index l) {
  if (d < 2 || l < 1) {
    throw std::invalid_argument("random_model: need d >= 2 and L >= 1");
  }
  std::mt19937_64 eng(seed);
  ProbVector weights{simplex_sample(eng, l)};
  std::array<Eigen::MatrixXd, 3> conditionals;
  for (int i = 0; i < 3; ++i) {
    conditionals[i].resize(l, d);
    for (Eigen::Index row = 0; row < l; ++row) {
      conditionals[i].row(row) = simplex_sample(eng, d).transpose();
    }
  }
  return HiddenVariableModel(std::move(weights), std::move(conditionals));
}

}  // namespace legwork
