// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hsx/initial_data.hpp"

namespace hsx {

/// State of one generalized characteristic at a fixed time.
struct CharPoint {
  double alpha = 0.0;    // label
  double x = 0.0;        // position y(alpha, t)
  double speed = 0.0;    // dy/dt, which equals u(y(alpha,t), t)
  double y_alpha = 0.0;  // right label-derivative of y(., t) at alpha
};

/// Time-independent data attached to a label: position xbar(alpha), initial
/// velocity there, accumulated mass w = alpha - xbar(alpha), and the index of
/// the containing segment. Everything downstream is affine in these.
struct LabelState {
  double x = 0.0;
  double u = 0.0;
  double w = 0.0;
  std::size_t segment = 0;
};
LabelState label_state(const InitialData& d, double alpha);

/// Pseudo-inverse of x + mubar((-inf, x)): nondecreasing, 1-Lipschitz,
/// xbar(alpha) <= alpha, and identity where the measure vanishes.
double xbar(const InitialData& d, double alpha);

/// alpha - xbar(alpha), computed as an exact running mass (avoids the
/// cancellation of subtracting two large affine values). Ranges over
/// [0, total mass], nondecreasing.
double xbar_gap(const InitialData& d, double alpha);

/// Characteristic position at time t. Affine in alpha on each segment,
/// nondecreasing and surjective in alpha for every t.
double y(const InitialData& d, double alpha, double t, EquationForm form);

/// Right slope of y(., t) at alpha: (1+ts/2)^2/(1+s^2) on a.c. segments,
/// t^2/4 on atom segments. Form-independent.
double y_alpha_slope(const InitialData& d, double alpha, double t);

/// Factor 1 + ts/2 evaluated so that it vanishes exactly (in binary64) at
/// t == blowup time -2/s emitted by blowup_times for |s| >= 1e-8.
double char_q(double slope, double t);

/// Smallest label alpha with y(alpha, t) = x (infimum over flat pieces).
double alpha_of(const InitialData& d, double x, double t, EquationForm form);

/// Largest such label (supremum over flat pieces).
double alpha_of_sup(const InitialData& d, double x, double t, EquationForm form);

/// alpha_of at the position (t^2/4) * xi of the self-similar variable xi.
/// Requires t != 0.
double alpha_scaled(const InitialData& d, double xi, double t, EquationForm form);

/// Label where characteristics cross level 0 (infimum convention) and level
/// (t^2/4) * mass shifted per form (supremum convention). Require t != 0.
double alpha_l(const InitialData& d, double t, EquationForm form);
double alpha_r(const InitialData& d, double t, EquationForm form);

/// Times -2/s over distinct velocity slopes s != 0, sorted ascending.
/// An atom in mubar concentrates only at t = 0, which is reported by
/// slice(d, 0) rather than listed here.
std::vector<double> blowup_times(const InitialData& d);

CharPoint char_point(const InitialData& d, double alpha, double t, EquationForm form);

}  // namespace hsx
