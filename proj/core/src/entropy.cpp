#include "legwork/entropy.hpp"

#include <string>

namespace legwork {

namespace detail {

void validate_distribution(double* p, Eigen::Index n, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + ": empty distribution");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double v = p[i];
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
    if (v < 0.0) {
      if (v < -ProbVector::kNegativeDust) {
        throw std::invalid_argument(std::string(what) + ": negative entry " +
                                    std::to_string(v));
      }
      v = 0.0;  // clip rounding dust
      p[i] = 0.0;
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > ProbVector::kSumTolerance) {
    throw std::invalid_argument(std::string(what) + ": entries sum to " +
                                std::to_string(sum) + ", expected 1");
  }
}

double power_sum(const double* p, Eigen::Index n, double alpha) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (p[i] > 0.0) s += std::pow(p[i], alpha);
  }
  return s;
}

double shannon_sum(const double* p, Eigen::Index n) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (p[i] > 0.0) s -= p[i] * std::log(p[i]);
  }
  return s;
}

double entropy_raw(const double* p, Eigen::Index n, EntropicOrder order) {
  if (order.is_shannon()) return shannon_sum(p, n);
  return (power_sum(p, n, order.alpha()) - 1.0) / (1.0 - order.alpha());
}

}  // namespace detail

ProbVector::ProbVector(Eigen::VectorXd p) : p_(std::move(p)) {
  detail::validate_distribution(p_.data(), p_.size(), "ProbVector");
}

ProbVector ProbVector::uniform(Eigen::Index d) {
  if (d < 1) throw std::invalid_argument("ProbVector::uniform: d must be >= 1");
  return ProbVector(Eigen::VectorXd::Constant(d, 1.0 / static_cast<double>(d)));
}

ProbVector ProbVector::point_mass(Eigen::Index d, Eigen::Index i) {
  if (d < 1 || i < 0 || i >= d) {
    throw std::invalid_argument("ProbVector::point_mass: index out of range");
  }
  Eigen::VectorXd p = Eigen::VectorXd::Zero(d);
  p(i) = 1.0;
  return ProbVector(std::move(p));
}

JointTable::JointTable(Eigen::MatrixXd w) : w_(std::move(w)) {
  detail::validate_distribution(w_.data(), w_.size(), "JointTable");
}

JointTable JointTable::from_product(const ProbVector& p, const ProbVector& q) {
  return JointTable(p.vec() * q.vec().transpose());
}

ProbVector JointTable::row_marginal() const {
  return ProbVector(w_.rowwise().sum());
}

ProbVector JointTable::col_marginal() const {
  return ProbVector(w_.colwise().sum().transpose());
}

ProbVector JointTable::flattened() const {
  return ProbVector(Eigen::Map<const Eigen::VectorXd>(w_.data(), w_.size()));
}

double alpha_log(double xi, EntropicOrder order) {
  if (!(xi > 0.0) || !std::isfinite(xi)) {
    throw std::domain_error("alpha_log: argument must be finite and > 0");
  }
  if (order.is_shannon()) return std::log(xi);
  const double a = order.alpha();
  return (std::pow(xi, 1.0 - a) - 1.0) / (1.0 - a);
}

double tsallis_entropy(const ProbVector& p, EntropicOrder order) {
  return detail::entropy_raw(p.vec().data(), p.size(), order);
}

double joint_entropy(const JointTable& w, EntropicOrder order) {
  return detail::entropy_raw(w.mat().data(), w.mat().size(), order);
}

double conditional_entropy(const JointTable& w, Given conditioned_on,
                           EntropicOrder order) {
  // H(X|Y) = sum_y p(y)^alpha H(X|y) with the weight p(y)^alpha collapsing
  // to p(y) on the Shannon branch.  Conditions of zero probability carry no
  // weight and are skipped.
  const bool on_cols = (conditioned_on == Given::columns);
  const Eigen::Index ny = on_cols ? w.cols() : w.rows();
  const Eigen::Index nx = on_cols ? w.rows() : w.cols();
  const double a = order.alpha();

  double h = 0.0;
  Eigen::VectorXd cond(nx);
  for (Eigen::Index y = 0; y < ny; ++y) {
    double py = 0.0;
    for (Eigen::Index x = 0; x < nx; ++x) {
      cond(x) = on_cols ? w(x, y) : w(y, x);
      py += cond(x);
    }
    if (py <= 0.0) continue;
    cond /= py;
    const double weight = order.is_shannon() ? py : std::pow(py, a);
    h += weight * detail::entropy_raw(cond.data(), nx, order);
  }
  return h;
}

double binary_entropy(double eta, EntropicOrder order) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error("binary_entropy: eta must lie in [0, 1]");
  }
  const double pair[2] = {eta, 1.0 - eta};
  return detail::entropy_raw(pair, 2, order);
}

double quaternary_entropy(double eta, EntropicOrder order) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error("quaternary_entropy: eta must lie in [0, 1]");
  }
  const double miss = 1.0 - eta;
  const double quad[4] = {eta * eta, eta * miss, miss * eta, miss * miss};
  return detail::entropy_raw(quad, 4, order);
}

double max_entropy(Eigen::Index d, EntropicOrder order) {
  if (d < 1) throw std::invalid_argument("max_entropy: d must be >= 1");
  return alpha_log(static_cast<double>(d), order);
}

}  // namespace legwork
