// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#include "hsx/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hsx/characteristics.hpp"

namespace hsx {

namespace {

void require_time(double t) {
  if (t == 0.0) throw std::invalid_argument("asymptotics: t = 0 has no leading-order wave");
}

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

// u - leading_term along labels; the same three expressions serve both forms
// because the form shift cancels against the recentred ramp.
struct LabelDiff {
  const InitialData& d;
  double t, M;
  double left(double alpha) const {
    LabelState p = label_state(d, alpha);
    return p.u + 0.5 * t * p.w;
  }
  double middle(double alpha) const {
    LabelState p = label_state(d, alpha);
    return -2.0 * p.x / t - p.u;
  }
  double right(double alpha) const {
    LabelState p = label_state(d, alpha);
    return p.u + 0.5 * t * (p.w - M);
  }
};

double overlap(double a, double b, double lo, double hi) {
  return std::max(0.0, std::min(b, hi) - std::max(a, lo));
}

}  // namespace

double kink_v(const InitialData& d, double xi) { return clamp(xi, 0.0, d.total_mass()); }

double kink_v1(const InitialData& d, double xi) {
  double h = 0.5 * d.total_mass();
  return clamp(xi, -h, h);
}

double leading_term(const InitialData& d, double x, double t, EquationForm form) {
  require_time(t);
  double xi = 4.0 * x / (t * t);
  return 0.5 * t * (form == EquationForm::A ? kink_v(d, xi) : kink_v1(d, xi));
}

double linf_error(const InitialData& d, double t, Region region, EquationForm form) {
  require_time(t);
  const std::size_t nb = d.breakpoint_count();
  if (nb == 0) return std::fabs(d.u().left_value());
  const double al = alpha_l(d, t, form);
  const double ar = alpha_r(d, t, form);
  const LabelDiff diff{d, t, d.total_mass()};

  double sup_left = std::fabs(d.u().left_value());
  double sup_mid = std::max(std::fabs(diff.middle(al)), std::fabs(diff.middle(ar)));
  double sup_right = std::fabs(d.u().right_value());
  sup_left = std::max(sup_left, std::fabs(diff.left(al)));
  sup_right = std::max(sup_right, std::fabs(diff.right(ar)));
  for (std::size_t k = 0; k < nb; ++k) {
    double a = d.bp_alpha(k);
    if (a <= al) sup_left = std::max(sup_left, std::fabs(diff.left(a)));
    if (a >= al && a <= ar) sup_mid = std::max(sup_mid, std::fabs(diff.middle(a)));
    if (a >= ar) sup_right = std::max(sup_right, std::fabs(diff.right(a)));
  }

  switch (region) {
    case Region::left: return sup_left;
    case Region::middle: return sup_mid;
    case Region::right: return sup_right;
    case Region::all: break;
  }
  return std::max({sup_left, sup_mid, sup_right});
}

double h1_error(const InitialData& d, double t, Region region, EquationForm form) {
  require_time(t);
  const std::size_t nb = d.breakpoint_count();
  if (nb == 0) return 0.0;
  const double al = alpha_l(d, t, form);
  const double ar = alpha_r(d, t, form);
  const double ramp = 4.0 / (t * t);
  const double inf = std::numeric_limits<double>::infinity();

  double sq_left = 0.0, sq_mid = 0.0, sq_right = 0.0;
  for (std::size_t i = 1; i + 1 < d.segment_count(); ++i) {
    const AlphaSegment& seg = d.segment(i);
    double a0 = d.bp_alpha(i - 1), a1 = d.bp_alpha(i);
    if (seg.atom) {
      // Spread atoms have slope exactly 2/t, matching the ramp inside it.
      sq_left += overlap(a0, a1, -inf, al);
      sq_right += overlap(a0, a1, ar, inf);
      continue;
    }
    if (char_q(seg.slope, t) == 0.0) continue;  // collapsed to a point
    sq_left += seg.f * overlap(a0, a1, -inf, al);
    sq_right += seg.f * overlap(a0, a1, ar, inf);
    sq_mid += ramp * seg.inv_1ps2 * overlap(a0, a1, al, ar);
  }
  sq_mid += ramp * overlap(-inf, d.bp_alpha(0), al, ar);
  sq_mid += ramp * overlap(d.bp_alpha(nb - 1), inf, al, ar);

  switch (region) {
    case Region::left: return std::sqrt(sq_left);
    case Region::middle: return std::sqrt(sq_mid);
    case Region::right: return std::sqrt(sq_right);
    case Region::all: break;
  }
  return std::sqrt(sq_left + sq_mid + sq_right);
}

TailStats tail_stats(const InitialData& d, Side side, double theta,
                     const std::vector<double>& T_grid) {
  if (!(theta >= 0.0) || theta >= 1.0)
    throw std::invalid_argument("tail_stats: theta must lie in [0, 1)");
  TailStats st;
  st.side = side;
  st.theta = theta;
  st.support_bound =
      side == Side::left ? d.mu().support_min() : d.mu().support_max();
  for (double T : T_grid) {
    if (!(T > 0.0)) throw std::invalid_argument("tail_stats: grid values must be positive");
    double scaled =
        std::pow(T, 1.0 - theta) * d.mu().tail_mass(side, std::pow(T, 1.0 + theta));
    st.values.emplace_back(T, scaled);
  }
  if (!st.values.empty()) st.estimate_A = st.values.back().second;
  if (st.values.size() < 2) {
    st.trend = "empty";
    return st;
  }
  bool up = false, down = false;
  for (std::size_t i = 1; i < st.values.size(); ++i) {
    double a = st.values[i - 1].second, b = st.values[i].second;
    double tol = 1e-12 * std::max({std::fabs(a), std::fabs(b), 1.0});
    if (b > a + tol) up = true;
    if (b < a - tol) down = true;
  }
  st.trend = up && down ? "mixed" : up ? "increasing" : down ? "decreasing" : "flat";
  return st;
}

RateReport rate_fit(const std::vector<std::pair<double, double>>& samples) {
  RateReport rep;
  for (auto [t, v] : samples) {
    if (!(t > 0.0)) throw std::invalid_argument("rate_fit: t values must be positive");
    if (v > 1e-13) rep.samples.emplace_back(t, v);
  }
  if (rep.samples.size() < 3)
    throw std::invalid_argument("rate_fit: fewer than 3 samples above the noise floor");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const double n = static_cast<double>(rep.samples.size());
  for (auto [t, v] : rep.samples) {
    double lx = std::log(t), ly = std::log(v);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  double den = n * sxx - sx * sx;
  rep.slope = (n * sxy - sx * sy) / den;
  rep.intercept = (sy - rep.slope * sx) / n;
  double ss_tot = syy - sy * sy / n;
  double ss_res = 0.0;
  for (auto [t, v] : rep.samples) {
    double r = std::log(v) - (rep.intercept + rep.slope * std::log(t));
    ss_res += r * r;
  }
  rep.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return rep;
}

AlphaStar alpha_star(const InitialData& d) {
  const std::size_t nb = d.breakpoint_count();
  const double half = 0.5 * d.total_mass();
  if (nb == 0 || half == 0.0) return {nb == 0 ? 0.0 : d.bp_alpha(0), true};
  std::size_t j = 1;
  while (d.bp_w(j) < half) ++j;
  const AlphaSegment& seg = d.segment(j);
  return {d.bp_alpha(j - 1) + (half - d.bp_w(j - 1)) / seg.f, false};
}

PointwisePrediction pointwise_prediction(const InitialData& d, double /*x*/,
                                         EquationForm form,
                                         const std::optional<TailInput>& tail) {
  PointwisePrediction p;
  const double c0 = d.u().left_value();
  if (form == EquationForm::B) {
    AlphaStar as = alpha_star(d);
    p.kind = PointwisePrediction::Kind::limit;
    if (as.degenerate) {
      p.case_label = "zero-energy";
      p.limit = c0;
      p.note = "no energy: the constant velocity persists";
    } else {
      LabelState ls = label_state(d, as.alpha);
      p.case_label = "half-mass-label";
      p.limit = -ls.u;
      p.note = "limit is minus the initial velocity at the half-mass label, independent of x";
    }
    return p;
  }
  if (tail && tail->unbounded_left) {
    const double th = tail->theta1, A = tail->A1;
    if (!(th >= 0.0) || th >= 1.0 || !(A >= 0.0))
      throw std::invalid_argument("pointwise_prediction: need theta1 in [0,1) and A1 >= 0");
    if (A > 0.0 && th > 0.0) {
      p.kind = PointwisePrediction::Kind::growth;
      p.case_label = "left-tail-growth";
      p.exponent = th;
      p.coefficient = 2.0 * std::pow(0.25 * A, 0.5 * (1.0 + th));
      p.note = "u(x,t)/t^theta1 tends to the coefficient for every x";
    } else if (A > 0.0) {
      p.kind = PointwisePrediction::Kind::limit;
      p.case_label = "left-tail-drift";
      p.limit = std::sqrt(c0 * c0 + A);
      p.note = "tail mass and the left velocity level combine in quadrature";
    } else if (th > 0.0) {
      p.kind = PointwisePrediction::Kind::growth;
      p.case_label = "left-tail-subscale";
      p.exponent = th;
      p.coefficient = 0.0;
      p.note = "u(x,t)/t^theta1 tends to zero for every x";
    } else {
      p.kind = PointwisePrediction::Kind::limit;
      p.case_label = "left-tail-thin";
      p.limit = std::fabs(c0);
      p.note = "vanishing scaled tail: same limit as bounded support";
    }
    return p;
  }
  p.kind = PointwisePrediction::Kind::limit;
  p.case_label = "bounded-left-support";
  p.limit = std::fabs(c0);
  p.note =
      "the stored measure has bounded support; describe the intended tail via "
      "TailInput if this data truncates an unbounded one";
  return p;
}

std::vector<ScalingRow> scaling_diagnostics(const InitialData& d, double x,
                                            const std::vector<double>& t_grid,
                                            double theta, EquationForm form) {
  if (!(theta >= 0.0) || theta >= 1.0)
    throw std::invalid_argument("scaling_diagnostics: theta must lie in [0, 1)");
  std::vector<ScalingRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!(t > 0.0))
      throw std::invalid_argument("scaling_diagnostics: t values must be positive");
    ScalingRow row;
    row.t = t;
    row.alpha_x = alpha_of(d, x, t, form);
    LabelState p = label_state(d, row.alpha_x);
    row.xbar_alpha = p.x;
    row.xbar_scaled = p.x / std::pow(t, 1.0 + theta);
    row.gap_scaled = std::pow(t, 1.0 - theta) * (row.alpha_x - p.x);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hsx
