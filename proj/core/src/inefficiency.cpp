#include "legwork/inefficiency.hpp"

#include <cmath>

#include "legwork/lg.hpp"

namespace legwork {

namespace {

constexpr double kViolationFloor = 1e-12;

double pow_or_shannon(double base, EntropicOrder order) {
  // eta^alpha with the Shannon branch collapsing the exponent to 1.
  return order.is_shannon() ? base : std::pow(base, order.alpha());
}

}  // namespace

ProbVector distort_single(const ProbVector& p, Efficiency eta) {
  const double e = eta.eta();
  Eigen::VectorXd q(p.size() + 1);
  q.head(p.size()) = e * p.vec();
  q(p.size()) = 1.0 - e;
  return ProbVector(std::move(q));
}

JointTable distort_pair(const JointTable& j, Efficiency eta) {
  const double e = eta.eta();
  const double miss = 1.0 - e;
  const Eigen::Index r = j.rows();
  const Eigen::Index c = j.cols();
  Eigen::MatrixXd q(r + 1, c + 1);
  q.topLeftCorner(r, c) = e * e * j.mat();
  q.topRightCorner(r, 1) = e * miss * j.mat().rowwise().sum();
  q.bottomLeftCorner(1, c) = e * miss * j.mat().colwise().sum();
  q(r, c) = miss * miss;
  return JointTable(std::move(q));
}

double entropy_single_closed(double h, Efficiency eta, EntropicOrder order) {
  if (h < 0.0) {
    throw std::invalid_argument("entropy_single_closed: H must be >= 0");
  }
  return pow_or_shannon(eta.eta(), order) * h + binary_entropy(eta.eta(), order);
}

double entropy_pair_closed(double h_joint, double h_x, double h_y,
                           Efficiency eta, EntropicOrder order) {
  if (h_joint < 0.0 || h_x < 0.0 || h_y < 0.0) {
    throw std::invalid_argument("entropy_pair_closed: entropies must be >= 0");
  }
  const double e = eta.eta();
  const double ea = pow_or_shannon(e, order);
  const double ma = pow_or_shannon(1.0 - e, order);
  return ea * ea * h_joint + ea * ma * (h_x + h_y) +
         quaternary_entropy(e, order);
}

double inefficiency_delta(double h_e1, Efficiency eta, EntropicOrder order) {
  if (h_e1 < 0.0) {
    throw std::invalid_argument("inefficiency_delta: H(E1) must be >= 0");
  }
  const double e = eta.eta();
  const double ea = pow_or_shannon(e, order);
  const double ma = pow_or_shannon(1.0 - e, order);
  return ea * (ea + 2.0 * ma - 1.0) * h_e1 + quaternary_entropy(e, order) -
         binary_entropy(e, order);
}

InefficiencyReport lg_inefficient(const ProtocolSpec& spec, EntropicOrder order,
                                  Efficiency eta) {
  const LGReport ideal = lg_report(spec, order);  // enforces alpha >= 1
  const ProtocolJoints joints = protocol_joints(spec);

  const double ea = pow_or_shannon(eta.eta(), order);
  const double delta = inefficiency_delta(ideal.h_e1, eta, order);
  const double c_closed = ea * ea * ideal.c_alpha - delta;

  // Defining combination evaluated on the distorted distributions.
  const double c_direct =
      joint_entropy(distort_pair(joints.j02, eta), order) +
      tsallis_entropy(distort_single(joints.p1, eta), order) -
      joint_entropy(distort_pair(joints.j12, eta), order) -
      joint_entropy(distort_pair(joints.j01, eta), order);

  InefficiencyReport report;
  report.eta = eta.eta();
  report.alpha = order.alpha();
  report.c_eta = c_closed;
  report.c_eta_direct = c_direct;
  report.delta = delta;
  if (ideal.c_alpha > kViolationFloor) {
    report.ratio = delta / (ea * ea * ideal.c_alpha);
  }
  return report;
}

double detection_ratio(const ProtocolSpec& spec, EntropicOrder order,
                       Efficiency eta) {
  const LGReport ideal = lg_report(spec, order);
  if (!(ideal.c_alpha > kViolationFloor)) {
    throw std::domain_error(
        "detection_ratio: C_alpha <= 1e-12, no violation to dilute");
  }
  const double ea = pow_or_shannon(eta.eta(), order);
  return inefficiency_delta(ideal.h_e1, eta, order) / (ea * ea * ideal.c_alpha);
}

}  // namespace legwork
