#pragma once

// Two-point-measurement protocol on a driven d-level system: thermal input
// state, projective energy measurements at three times, and the pair joints
// they induce.  Evolution between measurements is described by the unitary
// matrix elements taken between the instantaneous energy eigenbases.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

#include "legwork/entropy.hpp"

namespace legwork {

using ComplexMatrix = Eigen::MatrixXcd;

/// Square matrix validated to be unitary within kUnitarityTol (max-norm of
/// U^dagger U - I).
class UnitaryMatrix {
 public:
  static constexpr double kUnitarityTol = 1e-10;

  explicit UnitaryMatrix(ComplexMatrix u);

  Eigen::Index dim() const noexcept { return u_.rows(); }
  const ComplexMatrix& mat() const noexcept { return u_; }

 private:
  ComplexMatrix u_;
};

/// Strictly increasing, finite energy eigenvalues.
class EnergyLevels {
 public:
  explicit EnergyLevels(Eigen::VectorXd energies);

  Eigen::Index dim() const noexcept { return e_.size(); }
  double operator[](Eigen::Index i) const { return e_(i); }
  const Eigen::VectorXd& vec() const noexcept { return e_; }

 private:
  Eigen::VectorXd e_;
};

/// Column-stochastic transition matrix: T(l, k) = probability of outcome l
/// given input k; every column sums to 1 within kColumnSumTol.
class StochasticMatrix {
 public:
  static constexpr double kColumnSumTol = 1e-10;

  explicit StochasticMatrix(Eigen::MatrixXd t);

  Eigen::Index dim() const noexcept { return t_.rows(); }
  double operator()(Eigen::Index l, Eigen::Index k) const { return t_(l, k); }
  const Eigen::MatrixXd& mat() const noexcept { return t_; }

 private:
  Eigen::MatrixXd t_;
};

/// Full description of one three-measurement protocol run: energy levels at
/// the measurement times t0 <= t1 <= t2, inverse temperature of the input
/// state, and the two inter-measurement propagators (in energy bases).
struct ProtocolSpec {
  EnergyLevels levels0;
  EnergyLevels levels1;
  EnergyLevels levels2;
  double beta;
  UnitaryMatrix u10;  // t0 -> t1
  UnitaryMatrix u21;  // t1 -> t2

  ProtocolSpec(EnergyLevels l0, EnergyLevels l1, EnergyLevels l2, double b,
               UnitaryMatrix u_10, UnitaryMatrix u_21);

  Eigen::Index dim() const noexcept { return levels0.dim(); }
};

/// Thermal (Gibbs) distribution exp(-beta E_k) / Z, evaluated with the
/// max-shift trick so large beta never overflows.
ProbVector gibbs_distribution(const EnergyLevels& levels, double beta);

/// Unistochastic matrix of the propagator: T(l, k) = |U(l, k)|^2.
StochasticMatrix transition_matrix(const UnitaryMatrix& u);

/// Joint distribution of (input k, outcome l) when the input is measured
/// and then propagated: J(k, l) = p_in(k) * T(l, k).
JointTable pair_joint_measured(const ProbVector& p_in,
                               const StochasticMatrix& t);

/// Joint of the first and last outcomes when the middle measurement is NOT
/// performed: J(k, m) = p0(k) * |(U21 U10)(m, k)|^2.
JointTable skip_joint(const ProbVector& p0, const UnitaryMatrix& u10,
                      const UnitaryMatrix& u21);

/// Same quantity evaluated from the verbatim double sum over intermediate
/// eigenprojectors (no completeness collapse); kept as an audit route.
JointTable skip_joint_literal(const ProbVector& p0, const UnitaryMatrix& u10,
                              const UnitaryMatrix& u21);

/// Every distribution the protocol induces.  p2 is the final-measurement
/// marginal of the measured chain (column marginal of j12); the marginal of
/// the undisturbed run is available as j02.col_marginal() and in general
/// differs from p2.
struct ProtocolJoints {
  JointTable j01;
  JointTable j12;
  JointTable j02;
  ProbVector p0;
  ProbVector p1;
  ProbVector p2;
};

ProtocolJoints protocol_joints(const ProtocolSpec& spec);

}  // namespace legwork
