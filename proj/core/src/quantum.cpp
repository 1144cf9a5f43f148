#include "legwork/quantum.hpp"

namespace legwork {

UnitaryMatrix::UnitaryMatrix(ComplexMatrix u) : u_(std::move(u)) {
  if (u_.rows() < 1 || u_.rows() != u_.cols()) {
    throw std::invalid_argument("UnitaryMatrix: matrix must be square");
  }
  if (!u_.allFinite()) {
    throw std::invalid_argument("UnitaryMatrix: non-finite entry");
  }
  const ComplexMatrix gram = u_.adjoint() * u_;
  const double residual =
      (gram - ComplexMatrix::Identity(u_.rows(), u_.cols())).cwiseAbs().maxCoeff();
  if (residual > kUnitarityTol) {
    throw std::invalid_argument("UnitaryMatrix: U^dagger U deviates from identity by " +
                                std::to_string(residual));
  }
}

EnergyLevels::EnergyLevels(Eigen::VectorXd energies) : e_(std::move(energies)) {
  if (e_.size() < 1) {
    throw std::invalid_argument("EnergyLevels: need at least one level");
  }
  if (!e_.allFinite()) {
    throw std::invalid_argument("EnergyLevels: non-finite energy");
  }
  for (Eigen::Index i = 1; i < e_.size(); ++i) {
    if (!(e_(i) > e_(i - 1))) {
      throw std::invalid_argument("EnergyLevels: energies must be strictly increasing");
    }
  }
}

StochasticMatrix::StochasticMatrix(Eigen::MatrixXd t) : t_(std::move(t)) {
  if (t_.rows() < 1 || t_.rows() != t_.cols()) {
    throw std::invalid_argument("StochasticMatrix: matrix must be square");
  }
  for (Eigen::Index k = 0; k < t_.cols(); ++k) {
    double sum = 0.0;
    for (Eigen::Index l = 0; l < t_.rows(); ++l) {
      double v = t_(l, k);
      if (!std::isfinite(v)) {
        throw std::invalid_argument("StochasticMatrix: non-finite entry");
      }
      if (v < 0.0) {
        if (v < -ProbVector::kNegativeDust) {
          throw std::invalid_argument("StochasticMatrix: negative entry " +
                                      std::to_string(v));
        }
        t_(l, k) = 0.0;
        v = 0.0;
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kColumnSumTol) {
      throw std::invalid_argument("StochasticMatrix: column " + std::to_string(k) +
                                  " sums to " + std::to_string(sum));
    }
  }
}

ProtocolSpec::ProtocolSpec(EnergyLevels l0, EnergyLevels l1, EnergyLevels l2,
                           double b, UnitaryMatrix u_10, UnitaryMatrix u_21)
    : levels0(std::move(l0)),
      levels1(std::move(l1)),
      levels2(std::move(l2)),
      beta(b),
      u10(std::move(u_10)),
      u21(std::move(u_21)) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw std::invalid_argument("ProtocolSpec: beta must be finite and >= 0");
  }
  const Eigen::Index d = levels0.dim();
  if (d < 2) {
    throw std::invalid_argument("ProtocolSpec: need at least two levels");
  }
  if (levels1.dim() != d || levels2.dim() != d || u10.dim() != d ||
      u21.dim() != d) {
    throw std::invalid_argument("ProtocolSpec: dimension mismatch");
  }
}

ProbVector gibbs_distribution(const EnergyLevels& levels, double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw std::invalid_argument("gibbs_distribution: beta must be finite and >= 0");
  }
  // Shift by the minimum energy before exponentiating; the largest Boltzmann
  // weight is then exactly 1 and no underflow can empty the distribution.
  const Eigen::VectorXd shifted =
      (-beta * (levels.vec().array() - levels.vec().minCoeff())).exp();
  return ProbVector(shifted / shifted.sum());
}

StochasticMatrix transition_matrix(const UnitaryMatrix& u) {
  return StochasticMatrix(u.mat().cwiseAbs2());
}

JointTable pair_joint_measured(const ProbVector& p_in,
                               const StochasticMatrix& t) {
  if (p_in.size() != t.dim()) {
    throw std::invalid_argument("pair_joint_measured: dimension mismatch");
  }
  const Eigen::Index d = t.dim();
  Eigen::MatrixXd j(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index l = 0; l < d; ++l) {
      j(k, l) = p_in[k] * t(l, k);
    }
  }
  return JointTable(std::move(j));
}

JointTable skip_joint(const ProbVector& p0, const UnitaryMatrix& u10,
                      const UnitaryMatrix& u21) {
  if (p0.size() != u10.dim() || u10.dim() != u21.dim()) {
    throw std::invalid_argument("skip_joint: dimension mismatch");
  }
  const ComplexMatrix total = u21.mat() * u10.mat();
  const Eigen::Index d = p0.size();
  Eigen::MatrixXd j(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index m = 0; m < d; ++m) {
      j(k, m) = p0[k] * std::norm(total(m, k));
    }
  }
  return JointTable(std::move(j));
}

JointTable skip_joint_literal(const ProbVector& p0, const UnitaryMatrix& u10,
                              const UnitaryMatrix& u21) {
  if (p0.size() != u10.dim() || u10.dim() != u21.dim()) {
    throw std::invalid_argument("skip_joint_literal: dimension mismatch");
  }
  // Double sum over intermediate eigenprojector pairs (l, l'); each term is
  // U21(m,l) U10(l,k) conj(U10(l',k)) conj(U21(m,l')).  Summing both indices
  // independently reproduces skip_joint through completeness, which is
  // exactly what this route is meant to cross-check.
  const Eigen::Index d = p0.size();
  const ComplexMatrix& a = u10.mat();
  const ComplexMatrix& b = u21.mat();
  Eigen::MatrixXd j(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index m = 0; m < d; ++m) {
      std::complex<double> acc = 0.0;
      for (Eigen::Index l = 0; l < d; ++l) {
        for (Eigen::Index lp = 0; lp < d; ++lp) {
          acc += b(m, l) * a(l, k) * std::conj(a(lp, k)) * std::conj(b(m, lp));
        }
      }
      j(k, m) = p0[k] * acc.real();
    }
  }
  return JointTable(std::move(j));
}

ProtocolJoints protocol_joints(const ProtocolSpec& spec) {
  ProbVector p0 = gibbs_distribution(spec.levels0, spec.beta);
  const StochasticMatrix t10 = transition_matrix(spec.u10);
  const StochasticMatrix t21 = transition_matrix(spec.u21);

  JointTable j01 = pair_joint_measured(p0, t10);
  ProbVector p1 = j01.col_marginal();
  JointTable j12 = pair_joint_measured(p1, t21);
  ProbVector p2 = j12.col_marginal();
  JointTable j02 = skip_joint(p0, spec.u10, spec.u21);

  return ProtocolJoints{std::move(j01), std::move(j12), std::move(j02),
                        std::move(p0), std::move(p1), std::move(p2)};
}

}  // namespace legwork
