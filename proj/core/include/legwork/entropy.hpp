#pragma once

// Non-extensive (Tsallis) entropies of order alpha > 0, together with the
// validated probability containers the rest of the library is built on.
//
// Conventions used throughout:
//   * entropies are measured in nats (natural logarithms),
//   * 0^alpha = 0 and 0 * ln 0 = 0, so zero-probability outcomes never
//     contribute,
//   * orders within a narrow window of alpha = 1 evaluate through the
//     Shannon limit instead of the (0/0) Tsallis quotient.

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace legwork {

/// Entropic order alpha > 0.  Orders with |alpha - 1| < kShannonWindow are
/// routed through the Shannon branch of every formula.
class EntropicOrder {
 public:
  static constexpr double kShannonWindow = 1e-9;

  explicit EntropicOrder(double alpha) : alpha_(alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
      throw std::invalid_argument("EntropicOrder: alpha must be finite and > 0");
    }
  }

  double alpha() const noexcept { return alpha_; }
  bool is_shannon() const noexcept {
    return std::abs(alpha_ - 1.0) < kShannonWindow;
  }

 private:
  double alpha_;
};

/// Finite probability distribution.  Construction validates normalization:
/// entries must be >= -kNegativeDust (tiny negative dust is clipped to zero)
/// and the total must match 1 within kSumTolerance.
class ProbVector {
 public:
  static constexpr double kSumTolerance = 1e-9;
  static constexpr double kNegativeDust = 1e-12;

  explicit ProbVector(Eigen::VectorXd p);

  static ProbVector uniform(Eigen::Index d);
  static ProbVector point_mass(Eigen::Index d, Eigen::Index i);

  Eigen::Index size() const noexcept { return p_.size(); }
  double operator[](Eigen::Index i) const { return p_(i); }
  const Eigen::VectorXd& vec() const noexcept { return p_; }

 private:
  Eigen::VectorXd p_;
};

/// Joint distribution over a pair of finite alphabets, indexed (row, col).
/// Same validation rules as ProbVector, applied to the full table.
class JointTable {
 public:
  explicit JointTable(Eigen::MatrixXd w);

  /// Outer product table p(i) * q(j); always a valid joint.
  static JointTable from_product(const ProbVector& p, const ProbVector& q);

  Eigen::Index rows() const noexcept { return w_.rows(); }
  Eigen::Index cols() const noexcept { return w_.cols(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return w_(i, j); }
  const Eigen::MatrixXd& mat() const noexcept { return w_; }

  ProbVector row_marginal() const;  // sum over columns
  ProbVector col_marginal() const;  // sum over rows
  ProbVector flattened() const;     // table read as one distribution

 private:
  Eigen::MatrixXd w_;
};

/// Which index of a JointTable is conditioned on.
enum class Given { rows, columns };

/// alpha-logarithm ln_alpha(xi) = (xi^(1-alpha) - 1) / (1 - alpha) for
/// xi > 0, with the natural logarithm as the alpha -> 1 limit.
double alpha_log(double xi, EntropicOrder order);

/// Tsallis entropy H_alpha(p) = (sum_i p_i^alpha - 1) / (1 - alpha), with
/// the Shannon entropy -sum p ln p as the alpha -> 1 branch.
double tsallis_entropy(const ProbVector& p, EntropicOrder order);

/// Entropy of the table read as a single distribution.
double joint_entropy(const JointTable& w, EntropicOrder order);

/// Conditional entropy H_alpha(X|Y) = sum_y p(y)^alpha H_alpha(X|y), where Y
/// is the conditioned-on index.  Zero-probability conditions are skipped.
double conditional_entropy(const JointTable& w, Given conditioned_on,
                           EntropicOrder order);

/// Entropy of the pair (eta, 1 - eta); eta must lie in [0, 1].
double binary_entropy(double eta, EntropicOrder order);

/// Entropy of (eta^2, eta(1-eta), (1-eta)eta, (1-eta)^2).
double quaternary_entropy(double eta, EntropicOrder order);

/// Largest entropy attainable on d outcomes: ln_alpha(d).
double max_entropy(Eigen::Index d, EntropicOrder order);

namespace detail {

/// sum_i p_i^alpha over the positive entries of an arbitrary array.
double power_sum(const double* p, Eigen::Index n, double alpha);

/// -sum_i p_i ln p_i over the positive entries.
double shannon_sum(const double* p, Eigen::Index n);

/// Tsallis/Shannon entropy of a raw nonnegative array that is assumed to be
/// normalized; used internally where validated containers already exist.
double entropy_raw(const double* p, Eigen::Index n, EntropicOrder order);

/// Shared validation for probability containers: clips negative dust in
/// place, rejects genuinely negative entries and badly normalized totals.
void validate_distribution(double* p, Eigen::Index n, const char* what);

}  // namespace detail

}  // namespace legwork
