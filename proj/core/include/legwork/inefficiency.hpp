#pragma once

// Detector-inefficiency model: each measurement registers with probability
// eta and otherwise reports a no-click symbol, which is carried as an
// explicit extra outcome index (never a sentinel value).  Closed-form
// entropy transforms let the inefficient LG quantity be written in terms of
// the ideal one.

#include <optional>

#include "legwork/entropy.hpp"
#include "legwork/quantum.hpp"

namespace legwork {

/// Detection efficiency in [0, 1].
class Efficiency {
 public:
  explicit Efficiency(double eta) : eta_(eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
      throw std::invalid_argument("Efficiency: eta must lie in [0, 1]");
    }
  }

  double eta() const noexcept { return eta_; }

 private:
  double eta_;
};

/// Distribution seen by a lossy detector: eta * p(x) for the d genuine
/// outcomes plus a final no-click entry 1 - eta.
ProbVector distort_single(const ProbVector& p, Efficiency eta);

/// Pair analogue on (d+1) x (d+1): eta^2 * J in the genuine block,
/// eta(1-eta) times the marginals along the no-click row/column, and
/// (1-eta)^2 in the corner.
JointTable distort_pair(const JointTable& j, Efficiency eta);

/// Entropy of a distorted single distribution from the ideal entropy alone:
/// eta^alpha * H + h_b(eta).  Exact for every alpha > 0.
double entropy_single_closed(double h, Efficiency eta, EntropicOrder order);

/// Entropy of a distorted pair from the ideal joint and marginal entropies:
/// eta^{2 alpha} H_joint + eta^alpha (1-eta)^alpha (H_X + H_Y) + h_q(eta).
double entropy_pair_closed(double h_joint, double h_x, double h_y,
                           Efficiency eta, EntropicOrder order);

/// Reduction term Delta_alpha(eta) =
///   eta^alpha (eta^alpha + 2(1-eta)^alpha - 1) H_alpha(E1) + h_q - h_b;
/// Delta_alpha(1) = 0.
double inefficiency_delta(double h_e1, Efficiency eta, EntropicOrder order);

/// The inefficient LG quantity evaluated both ways.
///
/// c_eta is the closed form eta^{2 alpha} C_alpha - Delta.  c_eta_direct
/// re-evaluates the defining four-entropy combination on the distorted
/// tables.  The two coincide exactly when the (E0,E2) and (E1,E2) tables
/// share the same E2 marginal entropy — true for any classical three-variable
/// joint, but not for the quantum protocol, where the undisturbed final
/// marginal differs from the measured-chain one.  Their exact difference is
///   c_eta_direct - c_eta
///     = eta^alpha (1-eta)^alpha (H_alpha(E2 of J02) - H_alpha(E2 of J12)),
/// which the test suite pins; the report carries both values so the gap is
/// auditable.
struct InefficiencyReport {
  double eta;
  double alpha;
  double c_eta;         // closed form
  double c_eta_direct;  // four distorted entropies, by definition
  double delta;
  std::optional<double> ratio;  // present only when C_alpha > 1e-12
};

/// Same detection efficiency at all three measurements.  Requires alpha >= 1.
InefficiencyReport lg_inefficient(const ProtocolSpec& spec, EntropicOrder order,
                                  Efficiency eta);

/// r_alpha(eta) = Delta_alpha(eta) / (eta^{2 alpha} C_alpha); the relative
/// strength of the inefficiency penalty against the surviving violation.
/// Throws a domain error when C_alpha <= 1e-12 (no violation to dilute).
double detection_ratio(const ProtocolSpec& spec, EntropicOrder order,
                       Efficiency eta);

}  // namespace legwork
