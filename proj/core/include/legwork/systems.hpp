#pragma once

// The two worked system families: a driven qubit and a driven qutrit, both
// with equidistant, time-independent energy levels (gap 1 in units of the
// level spacing) and a one-parameter propagator applied in each interval.

#include <optional>
#include <string_view>

#include "legwork/quantum.hpp"

namespace legwork {

enum class SystemKind { qubit, qutrit };

/// One member of a system family: the kind fixes dimension, levels and the
/// propagator form; theta is the drive angle per interval; beta the inverse
/// temperature of the thermal input.
struct SystemFamily {
  SystemKind kind;
  double theta;
  double beta;
};

Eigen::Index system_dim(SystemKind kind);

/// Fixed equidistant levels in units of the qubit gap: qubit {0, 1},
/// qutrit {0, 1/2, 1} (three levels sharing the same total span).
EnergyLevels system_levels(SystemKind kind);

/// Qubit propagator: rotation by theta about the y axis,
///   [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]].
UnitaryMatrix qubit_unitary(double theta);

/// Qutrit propagator: spin-1 rotation by theta about the axis
/// (1/sqrt(2), 0, 1/sqrt(2)); real orthogonal for every theta.
UnitaryMatrix qutrit_unitary(double theta);

/// Protocol with the family's levels at all three times and the same
/// one-interval propagator in both intervals.
ProtocolSpec make_protocol(const SystemFamily& family);

std::string_view to_string(SystemKind kind);
std::optional<SystemKind> system_from_string(std::string_view name);

}  // namespace legwork
