#include "legwork/systems.hpp"

#include <cmath>

namespace legwork {

Eigen::Index system_dim(SystemKind kind) {
  return kind == SystemKind::qubit ? 2 : 3;
}

EnergyLevels system_levels(SystemKind kind) {
  if (kind == SystemKind::qubit) {
    Eigen::VectorXd e(2);
    e << 0.0, 1.0;
    return EnergyLevels(std::move(e));
  }
  Eigen::VectorXd e(3);
  e << 0.0, 0.5, 1.0;
  return EnergyLevels(std::move(e));
}

UnitaryMatrix qubit_unitary(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("qubit_unitary: theta must be finite");
  }
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  ComplexMatrix u(2, 2);
  u << c, -s, s, c;
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix qutrit_unitary(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("qutrit_unitary: theta must be finite");
  }
  // Spin-1 rotation about (1/sqrt(2), 0, 1/sqrt(2)); entries written out in
  // the |m = +1>, |m = 0>, |m = -1> basis.
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double r2 = std::sqrt(2.0);
  ComplexMatrix u(3, 3);
  u << 0.5 * (1.0 + c), -s / r2, 0.5 * (1.0 - c),
       s / r2,          c,       -s / r2,
       0.5 * (1.0 - c), s / r2,  0.5 * (1.0 + c);
  return UnitaryMatrix(std::move(u));
}

ProtocolSpec make_protocol(const SystemFamily& family) {
  EnergyLevels levels = system_levels(family.kind);
  UnitaryMatrix u = family.kind == SystemKind::qubit
                        ? qubit_unitary(family.theta)
                        : qutrit_unitary(family.theta);
  return ProtocolSpec(levels, levels, levels, family.beta, u, u);
}

std::string_view to_string(SystemKind kind) {
  return kind == SystemKind::qubit ? "qubit" : "qutrit";
}

std::optional<SystemKind> system_from_string(std::string_view name) {
  if (name == "qubit") return SystemKind::qubit;
  if (name == "qutrit") return SystemKind::qutrit;
  return std::nullopt;
}

}  // namespace legwork
