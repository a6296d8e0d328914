// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hsx {

/// Continuous piecewise-linear velocity with constant tails.
///
/// Nodes (xs[i], us[i]) have strictly increasing positions; the profile is
/// linear between consecutive nodes and constant outside [xs.front(),
/// xs.back()]. A single node encodes a constant function. Immutable.
class VelocityProfile {
 public:
  VelocityProfile(std::vector<double> xs, std::vector<double> us);

  static VelocityProfile constant(double value) { return {{0.0}, {value}}; }

  static std::optional<std::string> check(const std::vector<double>& xs,
                                          const std::vector<double>& us);

  double operator()(double x) const;

  double left_value() const { return us_.front(); }
  double right_value() const { return us_.back(); }

  std::size_t node_count() const { return xs_.size(); }
  std::size_t interval_count() const { return xs_.size() - 1; }

  /// Slope on (xs[i], xs[i+1]).
  double slope(std::size_t i) const;

  double sup_norm() const;

  /// Integral of the squared slope over the line (a finite sum).
  double dirichlet_energy() const;

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& us() const { return us_; }

  friend bool operator==(const VelocityProfile&, const VelocityProfile&) = default;

 private:
  std::vector<double> xs_;
  std::vector<double> us_;
};

}  // namespace hsx
