// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsx/initial_data.hpp"

namespace hsx {

/// Limit profiles of the rescaled solution (2/t) u((t^2/4) xi, t): a ramp
/// clamped to [0, mass] for form A, recentred to [-mass/2, mass/2] for form B.
double kink_v(const InitialData& d, double xi);
double kink_v1(const InitialData& d, double xi);

/// First-order wave (t/2) v(4x/t^2) (form A) or (t/2) v1(4x/t^2) (form B).
/// Requires t != 0. Its sup norm is (|t|/2) mass and its slope has L2 norm
/// sqrt(mass), independent of the data beyond the total mass.
double leading_term(const InitialData& d, double x, double t, EquationForm form);

enum class Region { left, middle, right, all };

/// sup |u - leading_term| over the region (left of the ramp, the ramp
/// interval, right of it, or everything). Both functions are piecewise
/// linear, so the supremum is attained at a breakpoint and the result is
/// exact. Requires t != 0.
double linf_error(const InitialData& d, double t, Region region, EquationForm form);

/// L2 norm of d/dx(u - leading_term) over the region, computed from
/// per-segment closed forms. Concentrated (singular) energy at blow-up times
/// is excluded here and reported by singular_mass. Requires t != 0.
double h1_error(const InitialData& d, double t, Region region, EquationForm form);

/// Grid study of T^(1-theta) * tail_mass(T^(1+theta)) used to estimate the
/// tail coefficient of the energy measure. estimate_A is the last grid value;
/// trend classifies the tail of the value sequence; support_bound reports the
/// finite support endpoint on that side when the measure is nonzero (every
/// representable measure has compact support, so a truncated approximation of
/// unbounded-support data is flagged by this field, not hidden).
struct TailStats {
  Side side = Side::left;
  double theta = 0.0;
  std::vector<std::pair<double, double>> values;  // (T, scaled tail mass)
  double estimate_A = 0.0;
  std::string trend;  // "increasing" | "decreasing" | "flat" | "mixed" | "empty"
  std::optional<double> support_bound;
};
TailStats tail_stats(const InitialData& d, Side side, double theta,
                     const std::vector<double>& T_grid);

/// Least-squares fit of log(value) against log(t). Values at or below the
/// 1e-13 noise floor are discarded; fewer than 3 usable samples or
/// nonpositive t reject with std::invalid_argument.
struct RateReport {
  std::vector<std::pair<double, double>> samples;  // the fitted (t, value) pairs
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
RateReport rate_fit(const std::vector<std::pair<double, double>>& samples);

/// Caller-supplied classification of the left tail of the original
/// (un-truncated) energy measure, for data whose representation is a
/// truncation. theta1 in [0,1), A1 >= 0.
struct TailInput {
  double theta1 = 0.0;
  double A1 = 0.0;
  bool unbounded_left = false;
};

/// Long-time pointwise behavior of u(x, t) at fixed x.
struct PointwisePrediction {
  enum class Kind { limit, growth, inconclusive };
  Kind kind = Kind::inconclusive;
  std::string case_label;
  double limit = 0.0;        // kind == limit
  double exponent = 0.0;     // kind == growth: u / t^exponent -> coefficient
  double coefficient = 0.0;
  std::string note;
};
PointwisePrediction pointwise_prediction(const InitialData& d, double x,
                                         EquationForm form,
                                         const std::optional<TailInput>& tail = {});

/// Smallest label with alpha - xbar(alpha) = mass/2 (the label pinned by the
/// form-B long-time limit -ubar(xbar(alpha_star))). degenerate marks the
/// zero-mass case, where every label solves and the limit is the constant
/// velocity itself.
struct AlphaStar {
  double alpha = 0.0;
  bool degenerate = false;
};
AlphaStar alpha_star(const InitialData& d);

/// Per-time diagnostics of the scaling limits driving the pointwise theory:
/// the label alpha_x(t) sent to x, its position xbar, xbar / t^(1+theta), and
/// t^(1-theta) (alpha_x - xbar).
struct ScalingRow {
  double t = 0.0;
  double alpha_x = 0.0;
  double xbar_alpha = 0.0;
  double xbar_scaled = 0.0;
  double gap_scaled = 0.0;
};
std::vector<ScalingRow> scaling_diagnostics(const InitialData& d, double x,
                                            const std::vector<double>& t_grid,
                                            double theta, EquationForm form);

}  // namespace hsx
