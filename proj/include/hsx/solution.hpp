// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hsx/characteristics.hpp"
#include "hsx/initial_data.hpp"

namespace hsx {

/// The solution state at one time: velocity profile, transported energy
/// measure, and the singular atoms present at that instant.
///
/// mu's density breakpoints coincide with the profile nodes; atoms are either
/// remnants of initial atoms (only at t = 0) or concentrations born at blow-up
/// times. provenance_* map each density interval / atom back to the index of
/// the label segment it is the image of.
struct SolutionSlice {
  double t = 0.0;
  EquationForm form = EquationForm::A;
  VelocityProfile u = VelocityProfile::constant(0.0);
  HybridMeasure mu;
  std::vector<Atom> singular_atoms;
  std::vector<std::size_t> provenance_density;
  std::vector<std::size_t> provenance_atoms;

  /// Velocity slope immediately right of x; nullopt exactly at a singular
  /// atom position, where the classical slope does not exist.
  std::optional<double> ac_slope_at(double x) const;
};

/// Pointwise conservative solution via the explicit characteristics.
double evaluate_u(const InitialData& d, double x, double t, EquationForm form);

/// Velocity value carried by label alpha at time t (the speed of that
/// characteristic); evaluate_u(x) == u_label(alpha_of(x)).
double u_label(const InitialData& d, double alpha, double t, EquationForm form);

/// Full state at time t. slice(d, 0) reproduces (ubar, mubar) exactly.
SolutionSlice slice(const InitialData& d, double t, EquationForm form);

/// Mass concentrated at time t != 0: (4/t^2) times the Lebesgue measure of
/// {ubar_x = -2/t}. Zero except at blowup_times(d). For the atoms carried at
/// t = 0 query slice(d, 0) instead; t == 0 is rejected.
double singular_mass(const InitialData& d, double t);

/// Re-labels a slice as fresh initial data (the flow is a semigroup).
/// Rejects slices whose invariants fail validation.
InitialData reinitialize(const SolutionSlice& s, std::string name = "");

/// Smooth separable bump supported on [cx-rx, cx+rx] x [ct-rt, ct+rt].
struct BumpTestFunction {
  double cx = 0.0, ct = 0.0, rx = 1.0, rt = 1.0;
  double value(double x, double t) const;
  double dx(double x, double t) const;
  double dt(double x, double t) const;
  static double shape(double s);    // exp(1 - 1/(1-s^2)) inside |s|<1, else 0
  static double shape_d(double s);  // its derivative
};

struct Box {
  double x_lo = 0.0, x_hi = 0.0, t_lo = 0.0, t_hi = 0.0;
};

/// Residuals of the two weak-form identities (momentum balance against the
/// half-antiderivative source, and transport of the energy measure) tested
/// against phi over the box. Exactly zero in exact arithmetic; the returned
/// values measure quadrature error only. The time integral is split at
/// blow-up times, at t = 0 when atoms exist, and where a velocity kink
/// crosses an edge of phi's spatial support, then evaluated with composite
/// Gauss panels; the space integral is split at every slice breakpoint.
/// nx / nt control the per-direction node budget. phi's spatial support must
/// lie inside the box; its time support must lie inside the window too,
/// except that a fully disjoint time support returns exactly zero.
struct WeakResidual {
  double momentum = 0.0;
  double energy = 0.0;
};
WeakResidual weak_residual(const InitialData& d, const BumpTestFunction& phi,
                           const Box& box, int nx, int nt, EquationForm form);

}  // namespace hsx
