// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#include "hsx/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsx {

namespace {

double form_shift(const InitialData& d, EquationForm form) {
  return form == EquationForm::B ? 0.5 * d.total_mass() : 0.0;
}

// y at breakpoint k, straight from the stored exact quantities.
double y_bp(const InitialData& d, std::size_t k, double t, double shift) {
  return d.bp_x(k) + d.bp_u(k) * t + 0.25 * t * t * (d.bp_w(k) - shift);
}

double segment_y_slope(const AlphaSegment& seg, double t) {
  if (seg.atom) return 0.25 * t * t;
  double q = char_q(seg.slope, t);
  return q * q * seg.inv_1ps2;
}

void require_nonzero_t(double t, const char* who) {
  if (t == 0.0) throw std::invalid_argument(std::string(who) + ": t = 0 is rejected");
}

// Shared pseudo-inverse of y(., t): smallest label reaching x when sup ==
// false, largest when sup == true. y(., t) is continuous, nondecreasing and
// surjective, so a solution always exists; flat pieces are resolved by the
// requested convention.
double invert_y(const InitialData& d, double x, double t, EquationForm form, bool sup) {
  const double shift = form_shift(d, form);
  const std::size_t nb = d.breakpoint_count();
  if (nb == 0) return x - d.u().left_value() * t;  // y(alpha) = alpha + c t

  std::size_t lo = 0, hi = nb;
  if (!sup) {
    while (lo < hi) {  // first k with y_bp(k) >= x
      std::size_t mid = lo + (hi - lo) / 2;
      if (y_bp(d, mid, t, shift) < x) lo = mid + 1; else hi = mid;
    }
  } else {
    while (lo < hi) {  // first k with y_bp(k) > x
      std::size_t mid = lo + (hi - lo) / 2;
      if (y_bp(d, mid, t, shift) <= x) lo = mid + 1; else hi = mid;
    }
  }

  if (lo == 0) return d.bp_alpha(0) - (y_bp(d, 0, t, shift) - x);        // left tail, slope 1
  if (lo == nb) return d.bp_alpha(nb - 1) + (x - y_bp(d, nb - 1, t, shift));  // right tail

  const AlphaSegment& seg = d.segment(lo);
  double a0 = d.bp_alpha(lo - 1), a1 = d.bp_alpha(lo);
  double ys = segment_y_slope(seg, t);
  if (ys == 0.0) return sup ? a1 : a0;
  double alpha = a0 + (x - y_bp(d, lo - 1, t, shift)) / ys;
  return std::clamp(alpha, a0, a1);
}

}  // namespace

double char_q(double slope, double t) {
  // Written so that t == -2/slope (as emitted by blowup_times) gives exactly
  // zero; for |slope| < 1e-8 the blow-up time exceeds 2e8 and the direct form
  // is used instead.
  if (std::abs(slope) >= 1e-8) return 0.5 * slope * (t + 2.0 / slope);
  return 1.0 + 0.5 * t * slope;
}

LabelState label_state(const InitialData& d, double alpha) {
  const std::size_t nb = d.breakpoint_count();
  if (nb == 0) return {alpha, d.u().left_value(), 0.0, 0};
  std::size_t i = d.segment_index(alpha);
  std::size_t k = (i == 0) ? 0 : i - 1;  // anchor breakpoint of segment i
  const AlphaSegment& seg = d.segment(i);
  double da = alpha - d.bp_alpha(k);
  double x = d.bp_x(k) + da * seg.inv_1ps2;
  return {x, d.bp_u(k) + seg.slope * (x - d.bp_x(k)), d.bp_w(k) + da * seg.f, i};
}

double xbar(const InitialData& d, double alpha) { return label_state(d, alpha).x; }

double xbar_gap(const InitialData& d, double alpha) { return label_state(d, alpha).w; }

double y(const InitialData& d, double alpha, double t, EquationForm form) {
  LabelState p = label_state(d, alpha);
  return p.x + p.u * t + 0.25 * t * t * (p.w - form_shift(d, form));
}

double y_alpha_slope(const InitialData& d, double alpha, double t) {
  return segment_y_slope(d.segment(d.segment_index(alpha)), t);
}

double alpha_of(const InitialData& d, double x, double t, EquationForm form) {
  return invert_y(d, x, t, form, /*sup=*/false);
}

double alpha_of_sup(const InitialData& d, double x, double t, EquationForm form) {
  return invert_y(d, x, t, form, /*sup=*/true);
}

double alpha_scaled(const InitialData& d, double xi, double t, EquationForm form) {
  require_nonzero_t(t, "alpha_scaled");
  return alpha_of(d, 0.25 * t * t * xi, t, form);
}

double alpha_l(const InitialData& d, double t, EquationForm form) {
  require_nonzero_t(t, "alpha_l");
  double level = form == EquationForm::B ? -0.125 * t * t * d.total_mass() : 0.0;
  return invert_y(d, level, t, form, /*sup=*/false);
}

double alpha_r(const InitialData& d, double t, EquationForm form) {
  require_nonzero_t(t, "alpha_r");
  double level = form == EquationForm::B ? 0.125 * t * t * d.total_mass()
                                         : 0.25 * t * t * d.total_mass();
  return invert_y(d, level, t, form, /*sup=*/true);
}

std::vector<double> blowup_times(const InitialData& d) {
  std::vector<double> ts;
  for (std::size_t i = 0; i < d.u().interval_count(); ++i) {
    double s = d.u().slope(i);
    if (s != 0.0) ts.push_back(-2.0 / s);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

CharPoint char_point(const InitialData& d, double alpha, double t, EquationForm form) {
  LabelState p = label_state(d, alpha);
  double shift = form_shift(d, form);
  return {alpha, p.x + p.u * t + 0.25 * t * t * (p.w - shift),
          p.u + 0.5 * t * (p.w - shift), y_alpha_slope(d, alpha, t)};
}

}  // namespace hsx
