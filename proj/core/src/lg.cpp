#include "legwork/lg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "legwork/parallel.hpp"

namespace legwork {

namespace {

constexpr double kPi = std::numbers::pi;

void require_order_at_least_one(EntropicOrder order, const char* what) {
  // The entropic LG inequality is established for alpha >= 1 only; treat the
  // Shannon window as exactly 1.
  if (order.alpha() < 1.0 && !order.is_shannon()) {
    throw std::invalid_argument(std::string(what) + ": requires alpha >= 1");
  }
}

void require_grid(const ThetaGrid& grid, const char* what) {
  if (grid.points < 2) {
    throw std::invalid_argument(std::string(what) + ": grid needs >= 2 points");
  }
}

double c_tilde_at(SystemKind system, double beta, double theta,
                  EntropicOrder order) {
  return lg_report(make_protocol({system, theta, beta}), order).c_tilde;
}

}  // namespace

LGReport lg_report(const ProtocolSpec& spec, EntropicOrder order) {
  require_order_at_least_one(order, "lg_report");
  const ProtocolJoints joints = protocol_joints(spec);

  LGReport r;
  r.alpha = order.alpha();
  r.h_w10 = joint_entropy(joints.j01, order);
  r.h_w21 = joint_entropy(joints.j12, order);
  r.h_w20 = joint_entropy(joints.j02, order);
  r.h_e1 = tsallis_entropy(joints.p1, order);
  r.c_alpha = r.h_w20 + r.h_e1 - r.h_w21 - r.h_w10;
  r.c_tilde = r.c_alpha / max_entropy(spec.dim(), order);
  return r;
}

double lg_conditional_form(const ProtocolSpec& spec, EntropicOrder order) {
  require_order_at_least_one(order, "lg_conditional_form");
  const ProtocolJoints joints = protocol_joints(spec);
  // Rows of each table index the earlier measurement, so conditioning on the
  // earlier outcome means conditioning on rows.
  const double h_e2_given_e0 =
      conditional_entropy(joints.j02, Given::rows, order);
  const double h_e2_given_e1 =
      conditional_entropy(joints.j12, Given::rows, order);
  const double h_e1_given_e0 =
      conditional_entropy(joints.j01, Given::rows, order);
  return h_e2_given_e0 - h_e2_given_e1 - h_e1_given_e0;
}

double ThetaGrid::step() const noexcept {
  return kPi / static_cast<double>(points);
}

double ThetaGrid::theta(std::size_t i) const noexcept {
  return kPi * static_cast<double>(i) / static_cast<double>(points);
}

double ViolationDomain::measure() const noexcept {
  double total = 0.0;
  for (const ThetaInterval& iv : intervals) total += iv.length();
  return total;
}

ViolationDomain violation_domain(SystemKind system, double beta,
                                 EntropicOrder order, const ThetaGrid& grid,
                                 double epsilon) {
  require_order_at_least_one(order, "violation_domain");
  require_grid(grid, "violation_domain");
  if (epsilon < 0.0) {
    throw std::invalid_argument("violation_domain: epsilon must be >= 0");
  }

  const auto inside = [&](double theta) {
    return c_tilde_at(system, beta, theta, order) > epsilon;
  };

  // Bisect one boundary between an inside and an outside angle until the
  // bracket is narrower than 1e-6 * pi; return the midpoint.
  const auto refine = [&](double theta_in, double theta_out) {
    const double tol = 1e-6 * kPi;
    while (std::abs(theta_out - theta_in) > tol) {
      const double mid = 0.5 * (theta_in + theta_out);
      (inside(mid) ? theta_in : theta_out) = mid;
    }
    return 0.5 * (theta_in + theta_out);
  };

  const std::size_t n = grid.points;
  std::vector<bool> hit(n);
  for (std::size_t i = 0; i < n; ++i) hit[i] = inside(grid.theta(i));

  ViolationDomain domain;
  domain.epsilon = epsilon;
  std::size_t i = 0;
  while (i < n) {
    if (!hit[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && hit[j + 1]) ++j;
    // Run of inside samples [i, j]; the true boundaries lie in the adjacent
    // grid cells (or at the domain edges 0 and pi).
    const double lo =
        (i == 0) ? grid.theta(0) : refine(grid.theta(i), grid.theta(i - 1));
    const double hi =
        (j + 1 == n) ? (inside(kPi) ? kPi : refine(grid.theta(j), kPi))
                     : refine(grid.theta(j), grid.theta(j + 1));
    domain.intervals.push_back({lo, hi});
    i = j + 1;
  }
  return domain;
}

std::vector<ThetaInterval> merge_intervals(std::vector<ThetaInterval> all) {
  if (all.empty()) return all;
  std::sort(all.begin(), all.end(),
            [](const ThetaInterval& a, const ThetaInterval& b) {
              return a.lo < b.lo;
            });
  std::vector<ThetaInterval> merged;
  merged.push_back(all.front());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, all[i].hi);
    } else {
      merged.push_back(all[i]);
    }
  }
  return merged;
}

ExtensionSummary extension_summary(SystemKind system, double beta,
                                   std::span<const double> alphas,
                                   const ThetaGrid& grid, double epsilon,
                                   unsigned threads) {
  const auto has_one = std::any_of(alphas.begin(), alphas.end(), [](double a) {
    return std::abs(a - 1.0) <= 1e-12;
  });
  if (!has_one) {
    throw std::invalid_argument("extension_summary: alpha grid must include 1");
  }

  std::vector<ViolationDomain> domains(alphas.size());
  parallel_for(alphas.size(), threads, [&](std::size_t i) {
    domains[i] =
        violation_domain(system, beta, EntropicOrder(alphas[i]), grid, epsilon);
  });

  double alpha1_measure = 0.0;
  std::vector<ThetaInterval> all;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (std::abs(alphas[i] - 1.0) <= 1e-12) {
      alpha1_measure = domains[i].measure();
    }
    all.insert(all.end(), domains[i].intervals.begin(),
               domains[i].intervals.end());
  }
  if (alpha1_measure <= 0.0) {
    throw std::domain_error(
        "extension_summary: alpha = 1 domain is empty; extension undefined");
  }

  double union_measure = 0.0;
  for (const ThetaInterval& iv : merge_intervals(std::move(all))) {
    union_measure += iv.length();
  }

  return ExtensionSummary{
      alpha1_measure, union_measure,
      100.0 * (union_measure - alpha1_measure) / alpha1_measure};
}

double domain_extension(SystemKind system, double beta,
                        std::span<const double> alphas, const ThetaGrid& grid,
                        double epsilon, unsigned threads) {
  return extension_summary(system, beta, alphas, grid, epsilon, threads)
      .extension_percent;
}

ThetaMaximum argmax_theta(SystemKind system, double beta, EntropicOrder order,
                          const ThetaGrid& grid) {
  require_order_at_least_one(order, "argmax_theta");
  require_grid(grid, "argmax_theta");

  const auto value = [&](double theta) {
    return c_tilde_at(system, beta, theta, order);
  };

  // Grid scan with tolerance-based tie-breaking: a later point only wins if
  // it beats the incumbent by more than 1e-12, so mirror-degenerate peaks
  // resolve to the smaller theta.
  constexpr double kTieTol = 1e-12;
  std::size_t best = 0;
  double best_value = value(grid.theta(0));
  for (std::size_t i = 1; i < grid.points; ++i) {
    const double v = value(grid.theta(i));
    if (v > best_value + kTieTol) {
      best = i;
      best_value = v;
    }
  }

  // Golden-section refinement inside the bracketing cells around the best
  // grid point (clamped to [0, pi]).
  double lo = (best == 0) ? grid.theta(0) : grid.theta(best - 1);
  double hi = (best + 1 >= grid.points) ? kPi : grid.theta(best + 1);
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = value(x1);
  double f2 = value(x2);
  const double tol = 1e-8 * kPi;
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = value(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = value(x1);
    }
  }
  const double refined = 0.5 * (lo + hi);
  const double refined_value = value(refined);

  // Keep the refined point only if it genuinely improves on the grid value;
  // on ties (flat or constant curves) the smaller theta wins.
  const double grid_theta = grid.theta(best);
  if (refined_value > best_value + kTieTol ||
      (std::abs(refined_value - best_value) <= kTieTol &&
       refined < grid_theta)) {
    return ThetaMaximum{refined, refined_value};
  }
  return ThetaMaximum{grid_theta, best_value};
}

}  // namespace legwork
