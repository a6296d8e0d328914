// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hsx {

enum class Side { left, right };

/// A point mass on the real line.
struct Atom {
  double position = 0.0;
  double mass = 0.0;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite nonnegative measure represented exactly as a piecewise-constant
/// density plus finitely many atoms.
///
/// The density takes value density_values[i] on (breakpoints[i],
/// breakpoints[i+1]) and vanishes outside [breakpoints.front(),
/// breakpoints.back()]. Atom positions are strictly increasing and may
/// coincide with density breakpoints. This class of measures is closed under
/// the conservative Hunter-Saxton flow, so every mass query below is a finite
/// closed-form sum. Instances are immutable and always valid.
class HybridMeasure {
 public:
  HybridMeasure() = default;  // the zero measure
  HybridMeasure(std::vector<double> breakpoints, std::vector<double> densities,
                std::vector<Atom> atoms);

  /// First violated invariant of a candidate representation, if any.
  static std::optional<std::string> check(const std::vector<double>& breakpoints,
                                          const std::vector<double>& densities,
                                          const std::vector<Atom>& atoms);

  /// Re-checks this instance (useful after deserialization plumbing).
  std::optional<std::string> validate() const;

  /// mu((-inf, x)) for closed == false, mu((-inf, x]) for closed == true.
  /// The two differ exactly by the mass of an atom sitting at x.
  double cdf(double x, bool closed) const;

  /// Mass strictly beyond the threshold: mu((-inf, -T)) on the left side,
  /// mu((T, +inf)) on the right. Requires T > 0.
  double tail_mass(Side side, double threshold) const;

  double total_mass() const { return total_mass_; }
  double ac_mass() const { return ac_mass_; }
  double atom_mass() const { return total_mass_ - ac_mass_; }

  bool is_zero() const { return total_mass_ == 0.0 && atoms_.empty() && breakpoints_.empty(); }

  /// Endpoints of the support (atoms plus positive-density intervals);
  /// nullopt for the zero measure.
  std::optional<double> support_min() const;
  std::optional<double> support_max() const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& densities() const { return densities_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  friend bool operator==(const HybridMeasure&, const HybridMeasure&) = default;

 private:
  std::vector<double> breakpoints_;  // strictly increasing; empty or size >= 2
  std::vector<double> densities_;   // size == breakpoints.size() - 1, each >= 0
  std::vector<Atom> atoms_;         // strictly increasing positions, masses > 0
  std::vector<double> cum_ac_;      // cumulative density mass up to breakpoints_[i]
  double total_mass_ = 0.0;
  double ac_mass_ = 0.0;
};

}  // namespace hsx
