#pragma once

// Entropic Leggett-Garg quantities for work fluctuations: the four-entropy
// combination C_alpha, its rescaled form, violation domains over the drive
// angle, and domain-extension statistics over grids of entropic orders.

#include <cstddef>
#include <span>
#include <vector>

#include "legwork/entropy.hpp"
#include "legwork/quantum.hpp"
#include "legwork/systems.hpp"

namespace legwork {

/// The four protocol entropies and the LG combination they form:
///   C_alpha = H(W20) + H(E1) - H(W21) - H(W10),
///   C_tilde = C_alpha / ln_alpha(d).
/// Macrorealism requires C_alpha <= 0; positive values witness violation.
struct LGReport {
  double alpha;
  double h_w10;
  double h_w21;
  double h_w20;
  double h_e1;
  double c_alpha;
  double c_tilde;
};

/// Evaluate the LG combination for one protocol.  Orders below 1 are
/// rejected: the underlying inequality is only established for alpha >= 1.
LGReport lg_report(const ProtocolSpec& spec, EntropicOrder order);

/// Equivalent conditional-entropy form
///   H(E2|E0) - H(E2|E1) - H(E1|E0),
/// tied to lg_report(...).c_alpha by the chain rule; kept as a cross-check.
double lg_conditional_form(const ProtocolSpec& spec, EntropicOrder order);

/// Uniform grid of drive angles covering [0, pi): theta_i = pi * i / points.
struct ThetaGrid {
  std::size_t points = 2001;

  double step() const noexcept;
  double theta(std::size_t i) const noexcept;
};

/// Closed angle interval [lo, hi] within [0, pi].
struct ThetaInterval {
  double lo;
  double hi;

  double length() const noexcept { return hi - lo; }
};

/// Where the rescaled LG quantity exceeds the threshold epsilon, as a sorted
/// list of disjoint intervals plus their total measure (radians).
struct ViolationDomain {
  std::vector<ThetaInterval> intervals;
  double epsilon = 0.0;

  double measure() const noexcept;
};

/// Scan C_tilde over the grid and refine every threshold crossing by
/// bisection to |delta theta| <= 1e-6 * pi.  Membership is tested as
/// C_tilde > epsilon; since ln_alpha(d) > 0 this agrees in sign with
/// C_alpha > 0.
ViolationDomain violation_domain(SystemKind system, double beta,
                                 EntropicOrder order, const ThetaGrid& grid,
                                 double epsilon);

/// Measure of the union of violation domains over an order grid, compared
/// against the alpha = 1 domain.
struct ExtensionSummary {
  double alpha1_measure;  // |D_1| in radians
  double union_measure;   // |union over alpha of D_alpha|
  double extension_percent;
};

/// alphas must contain 1.0 (within 1e-12) and only values >= 1; throws a
/// domain error if the alpha = 1 domain is empty (extension undefined).
ExtensionSummary extension_summary(SystemKind system, double beta,
                                   std::span<const double> alphas,
                                   const ThetaGrid& grid, double epsilon,
                                   unsigned threads = 1);

/// Just the percentage 100 * (|D_union| - |D_1|) / |D_1|.
double domain_extension(SystemKind system, double beta,
                        std::span<const double> alphas, const ThetaGrid& grid,
                        double epsilon, unsigned threads = 1);

/// Location and value of the C_tilde maximum over theta.
struct ThetaMaximum {
  double theta;
  double c_tilde;
};

/// Grid argmax refined by golden-section search to |delta theta| <= 1e-8*pi.
/// Values within 1e-12 of each other count as ties and resolve to the
/// smallest theta, so exactly mirror-symmetric peaks pick the left one.
ThetaMaximum argmax_theta(SystemKind system, double beta, EntropicOrder order,
                          const ThetaGrid& grid);

/// Merge possibly-overlapping intervals from several domains into a sorted
/// disjoint list (the measure of the union).  Exposed for the CLI.
std::vector<ThetaInterval> merge_intervals(std::vector<ThetaInterval> all);

}  // namespace legwork
