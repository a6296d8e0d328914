// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#include "hsx/solution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hsx/quadrature.hpp"

namespace hsx {

namespace {

double form_shift(const InitialData& d, EquationForm form) {
  return form == EquationForm::B ? 0.5 * d.total_mass() : 0.0;
}

}  // namespace

double u_label(const InitialData& d, double alpha, double t, EquationForm form) {
  LabelState p = label_state(d, alpha);
  return p.u + 0.5 * t * (p.w - form_shift(d, form));
}

double evaluate_u(const InitialData& d, double x, double t, EquationForm form) {
  return u_label(d, alpha_of(d, x, t, form), t, form);
}

std::optional<double> SolutionSlice::ac_slope_at(double x) const {
  for (const Atom& a : singular_atoms)
    if (a.position == x) return std::nullopt;
  const auto& xs = u.xs();
  if (x < xs.front() || x >= xs.back()) return 0.0;
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  return u.slope(static_cast<std::size_t>(it - xs.begin()) - 1);
}

SolutionSlice slice(const InitialData& d, double t, EquationForm form) {
  SolutionSlice out;
  out.t = t;
  out.form = form;
  const double shift = form_shift(d, form);
  const std::size_t nb = d.breakpoint_count();

  if (nb == 0) {
    out.u = VelocityProfile::constant(d.u().left_value());
    return out;
  }

  if (t == 0.0) {
    out.u = d.u();
    out.mu = d.mu();
    out.singular_atoms = d.mu().atoms();
    // Density interval j starts inside the first a.c. segment covering it;
    // atoms pair up with atom segments in position order.
    std::size_t seg = 1;
    for (std::size_t j = 0; j + 1 < out.mu.breakpoints().size(); ++j) {
      double lo = out.mu.breakpoints()[j];
      while (seg + 1 < d.segment_count() && (d.segment(seg).atom || d.bp_x(seg) <= lo)) ++seg;
      out.provenance_density.push_back(seg);
    }
    for (std::size_t i = 1; i + 1 < d.segment_count(); ++i)
      if (d.segment(i).atom) out.provenance_atoms.push_back(i);
    return out;
  }

  // Walk the interior segments accumulating image widths; this keeps the
  // image breakpoints monotone and mass products well conditioned even for
  // nearly collapsed segments.
  std::vector<double> xs, us, rho;
  std::vector<Atom> atoms;
  double X = d.bp_x(0) + d.bp_u(0) * t + 0.25 * t * t * (d.bp_w(0) - shift);
  double U = d.bp_u(0) + 0.5 * t * (d.bp_w(0) - shift);
  xs.push_back(X);
  us.push_back(U);
  double pending = 0.0;  // mass concentrating at the current X
  std::size_t pending_seg = 0;
  auto flush = [&] {
    if (pending > 0.0) {
      atoms.push_back({X, pending});
      out.provenance_atoms.push_back(pending_seg);
      pending = 0.0;
    }
  };
  for (std::size_t i = 1; i < d.segment_count() - 1; ++i) {
    const AlphaSegment& seg = d.segment(i);
    double da = d.bp_alpha(i) - d.bp_alpha(i - 1);
    double width, uslope, dens;
    if (seg.atom) {
      width = 0.25 * t * t * da;
      uslope = 2.0 / t;
      dens = 4.0 / (t * t);
    } else {
      double q = char_q(seg.slope, t);
      width = q * q * seg.inv_1ps2 * da;
      if (q == 0.0 || width == 0.0) {
        if (pending == 0.0) pending_seg = i;
        pending += seg.f * da;
        continue;
      }
      uslope = seg.slope / q;
      dens = uslope * uslope;
    }
    flush();
    rho.push_back(dens);
    out.provenance_density.push_back(i);
    X += width;
    U += uslope * width;
    xs.push_back(X);
    us.push_back(U);
  }
  flush();

  out.u = VelocityProfile(xs, us);
  std::vector<double> bps = rho.empty() ? std::vector<double>{} : xs;
  out.mu = HybridMeasure(std::move(bps), std::move(rho), atoms);
  out.singular_atoms = std::move(atoms);
  return out;
}

double singular_mass(const InitialData& d, double t) {
  if (t == 0.0)
    throw std::invalid_argument("singular_mass: t = 0 is rejected; query slice(d, 0) for the initial atoms");
  double len = 0.0;
  for (std::size_t i = 0; i < d.u().interval_count(); ++i) {
    double s = d.u().slope(i);
    if (s != 0.0 && char_q(s, t) == 0.0) len += d.u().xs()[i + 1] - d.u().xs()[i];
  }
  return len == 0.0 ? 0.0 : 4.0 / (t * t) * len;
}

InitialData reinitialize(const SolutionSlice& s, std::string name) {
  return InitialData::build(s.u, s.mu.atoms(), std::move(name));
}

double BumpTestFunction::shape(double s) {
  double r = 1.0 - s * s;
  if (!(r > 0.0)) return 0.0;
  return std::exp(1.0 - 1.0 / r);
}

double BumpTestFunction::shape_d(double s) {
  double r = 1.0 - s * s;
  if (!(r > 0.0)) return 0.0;
  return std::exp(1.0 - 1.0 / r) * (-2.0 * s / (r * r));
}

double BumpTestFunction::value(double x, double t) const {
  return shape((x - cx) / rx) * shape((t - ct) / rt);
}

double BumpTestFunction::dx(double x, double t) const {
  return shape_d((x - cx) / rx) / rx * shape((t - ct) / rt);
}

double BumpTestFunction::dt(double x, double t) const {
  return shape((x - cx) / rx) * shape_d((t - ct) / rt) / rt;
}

WeakResidual weak_residual(const InitialData& d, const BumpTestFunction& phi,
                           const Box& box, int nx, int nt, EquationForm form) {
  if (!(phi.rx > 0.0) || !(phi.rt > 0.0))
    throw std::invalid_argument("weak_residual: test function radii must be positive");
  if (nx < 1 || nt < 1) throw std::invalid_argument("weak_residual: node counts must be >= 1");
  if (phi.cx - phi.rx < box.x_lo || phi.cx + phi.rx > box.x_hi)
    throw std::invalid_argument("weak_residual: test function support exceeds the box");
  // A time support fully outside the window contributes exactly zero; a
  // partial overlap would clip the bump mid-support and break the identity.
  if (phi.ct - phi.rt >= box.t_hi || phi.ct + phi.rt <= box.t_lo) return {};
  if (phi.ct - phi.rt < box.t_lo || phi.ct + phi.rt > box.t_hi)
    throw std::invalid_argument("weak_residual: test function support exceeds the box");

  const double M = d.total_mass();
  const double source_offset = form == EquationForm::B ? 0.25 * M : 0.0;

  // Time panels: split at blow-up times (and t = 0 when atoms spread) so the
  // integrand is smooth on each panel, then lay composite Gauss panels.
  std::vector<double> cuts = {phi.ct - phi.rt, phi.ct + phi.rt};
  for (double tb : blowup_times(d))
    if (tb > cuts[0] && tb < cuts[1]) cuts.push_back(tb);
  if (!d.mu().atoms().empty() && 0.0 > cuts[0] && 0.0 < cuts[1]) cuts.push_back(0.0);

  // The x-integral is smooth in t except when a velocity kink crosses an edge
  // of the test-function support; each kink path is the quadratic
  // y(alpha_i, t), so cut the time panels at its crossings.
  const double shift = form_shift(d, form);
  auto add_root = [&](double t) {
    if (t > cuts[0] && t < cuts[1]) cuts.push_back(t);
  };
  for (std::size_t i = 0; i < d.breakpoint_count(); ++i) {
    double a = 0.25 * (d.bp_w(i) - shift);
    double b = d.bp_u(i);
    for (double edge : {phi.cx - phi.rx, phi.cx + phi.rx}) {
      double c0 = d.bp_x(i) - edge;
      if (a == 0.0) {
        if (b != 0.0) add_root(-c0 / b);
        continue;
      }
      double disc = b * b - 4.0 * a * c0;
      if (disc < 0.0) continue;
      double sq = std::sqrt(disc);
      add_root((-b - sq) / (2.0 * a));
      add_root((-b + sq) / (2.0 * a));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // The bump vanishes to all orders at its support edges (flat but not
  // analytic), so uniform panels converge slowly; grade the panels
  // geometrically toward both ends of every smooth interval instead.
  static const double kFrac[] = {0.0,       1.0 / 64.0,  1.0 / 16.0, 1.0 / 4.0,
                                 3.0 / 4.0, 15.0 / 16.0, 63.0 / 64.0, 1.0};
  const int panels = static_cast<int>(std::size(kFrac)) - 1;
  const int panel_nodes = std::max(3, (nt + panels - 1) / panels);
  const GaussRule& gt = gauss_rule(panel_nodes);
  const GaussRule& gx = gauss_rule(nx);

  const double sup_lo = phi.cx - phi.rx, sup_hi = phi.cx + phi.rx;

  double mom = 0.0, en = 0.0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    double clen = cuts[c + 1] - cuts[c];
    for (int p = 0; p < panels; ++p) {
      double a = cuts[c] + clen * kFrac[p];
      double plen = clen * (kFrac[p + 1] - kFrac[p]);
      for (int it = 0; it < panel_nodes; ++it) {
        double tau = a + 0.5 * plen * (gt.nodes[it] + 1.0);
        double wt = 0.5 * plen * gt.weights[it];
        SolutionSlice s = slice(d, tau, form);

        std::vector<double> cells = {sup_lo, sup_hi};
        for (double bx : s.u.xs())
          if (bx > sup_lo && bx < sup_hi) cells.push_back(bx);
        std::sort(cells.begin(), cells.end());

        double mom_t = 0.0, en_t = 0.0;
        for (std::size_t ci = 0; ci + 1 < cells.size(); ++ci) {
          double lo = cells[ci], hi = cells[ci + 1];
          if (!(hi > lo)) continue;
          double mid = lo + 0.5 * (hi - lo);
          double dens = 0.0;
          const auto& mb = s.mu.breakpoints();
          if (mb.size() >= 2 && mid > mb.front() && mid < mb.back()) {
            auto itb = std::upper_bound(mb.begin(), mb.end(), mid);
            dens = s.mu.densities()[static_cast<std::size_t>(itb - mb.begin()) - 1];
          }
          for (int ix = 0; ix < nx; ++ix) {
            double xq = lo + 0.5 * (hi - lo) * (gx.nodes[ix] + 1.0);
            double wq = 0.5 * (hi - lo) * gx.weights[ix];
            double uq = s.u(xq);
            double pv = phi.value(xq, tau);
            double pt = phi.dt(xq, tau);
            double px = phi.dx(xq, tau);
            double F = s.mu.cdf(xq, /*closed=*/true);
            mom_t += wq * (uq * pt + 0.5 * uq * uq * px + (0.5 * F - source_offset) * pv);
            en_t += wq * dens * (pt + uq * px);
          }
        }
        for (const Atom& at : s.mu.atoms()) {
          if (at.position >= sup_lo && at.position <= sup_hi)
            en_t += at.mass *
                    (phi.dt(at.position, tau) + s.u(at.position) * phi.dx(at.position, tau));
        }
        mom += wt * mom_t;
        en += wt * en_t;
      }
    }
  }
  return {mom, en};
}

}  // namespace hsx
