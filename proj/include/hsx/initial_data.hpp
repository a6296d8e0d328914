// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hsx/measure.hpp"
#include "hsx/velocity_profile.hpp"

namespace hsx {

/// Flavor of the nonlocal source term integrated along characteristics.
/// Form A uses the one-sided antiderivative of the energy measure, form B the
/// symmetrized one; solutions differ by an explicit drift in x and u.
enum class EquationForm { A, B };

/// One interval of the label-space decomposition (see InitialData).
struct AlphaSegment {
  double slope = 0.0;      // velocity slope s on the underlying x-interval
  double inv_1ps2 = 1.0;   // dxbar/dalpha: 1/(1+s^2) on a.c. segments, 0 on atoms
  double f = 0.0;          // transported energy density 1 - dxbar/dalpha
  bool atom = false;
  double mass = 0.0;       // atom mass (atom segments only)

  friend bool operator==(const AlphaSegment&, const AlphaSegment&) = default;
};

/// Initial state (ubar, mubar) of the conservative flow: a piecewise-linear
/// velocity plus an energy measure whose absolutely continuous part is always
/// ubar_x^2 dx (derived, never stored independently) plus optional atoms.
///
/// Construction precomputes the decomposition of the label line into maximal
/// intervals on which the pseudo-inverse xbar of x + mubar((-inf,x)) is
/// affine: an unbounded zero-slope tail on each end, one interval per
/// velocity segment, and one flat interval per atom. Breakpoint k stores the
/// label alpha_k, the position x_k = xbar(alpha_k), the velocity u_k =
/// ubar(x_k), and the exact accumulated mass w_k = alpha_k - x_k =
/// mubar((-inf, x_k)) (left-closure chosen so atoms sit between their
/// flanking breakpoints). Segment i spans [alpha_{i-1}, alpha_i] with the
/// extreme indices unbounded. All downstream evaluation is exact per-segment
/// affine arithmetic anchored at these breakpoints.
class InitialData {
 public:
  /// Canonical constructor; atoms need strictly increasing positions and
  /// positive masses. The measure is derived from the profile and atoms.
  static InitialData build(VelocityProfile u, std::vector<Atom> atoms,
                           std::string name = "");

  /// Constant velocity k with a single atom of mass ell at x0.
  static InitialData example_dirac(double k, double ell, double x0);

  /// Velocity 0 for x<=0, -x on (0,1), -1 for x>=1; purely a.c. energy.
  static InitialData example_compact();

  /// Interpolant of x |-> integral_0^x sin(y)/|y|^a dy on [-radius, radius]
  /// with nodes_per_unit nodes per unit length; a in (1/2, 1].
  static InitialData example_sine_tail(double a, double radius, int nodes_per_unit);

  const VelocityProfile& u() const { return u_; }
  const HybridMeasure& mu() const { return mu_; }
  double total_mass() const { return mu_.total_mass(); }
  const std::string& name() const { return name_; }

  std::size_t breakpoint_count() const { return bp_alpha_.size(); }
  std::size_t segment_count() const { return segments_.size(); }
  double bp_alpha(std::size_t k) const { return bp_alpha_[k]; }
  double bp_x(std::size_t k) const { return bp_x_[k]; }
  double bp_u(std::size_t k) const { return bp_u_[k]; }
  double bp_w(std::size_t k) const { return bp_w_[k]; }
  const AlphaSegment& segment(std::size_t i) const { return segments_[i]; }

  /// Index of the segment whose half-open interval [alpha_{i-1}, alpha_i)
  /// contains alpha (right-continuous at breakpoints).
  std::size_t segment_index(double alpha) const;

  /// JSON document round-trip. load() throws std::runtime_error on schema or
  /// compatibility violations, with a description of the offending field.
  std::string save_json() const;
  static InitialData load_json(const std::string& text);
  static InitialData load_file(const std::string& path);

  friend bool operator==(const InitialData&, const InitialData&) = default;

 private:
  InitialData(VelocityProfile u, std::vector<Atom> atoms, std::string name);

  VelocityProfile u_;
  std::vector<Atom> atoms_;
  HybridMeasure mu_;
  std::string name_;

  std::vector<double> bp_alpha_, bp_x_, bp_u_, bp_w_;
  std::vector<AlphaSegment> segments_;  // size == breakpoint_count() + 1
};

}  // namespace hsx
