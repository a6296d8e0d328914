// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#include "hsx/velocity_profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsx {

std::optional<std::string> VelocityProfile::check(const std::vector<double>& xs,
                                                  const std::vector<double>& us) {
  if (xs.empty()) return "profile needs at least one node";
  if (xs.size() != us.size()) return "node position/value count mismatch";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(us[i]))
      return "node " + std::to_string(i) + " is not finite";
    if (i > 0 && !(xs[i - 1] < xs[i]))
      return "node positions not strictly increasing at index " + std::to_string(i);
  }
  return std::nullopt;
}

VelocityProfile::VelocityProfile(std::vector<double> xs, std::vector<double> us)
    : xs_(std::move(xs)), us_(std::move(us)) {
  if (auto err = check(xs_, us_)) throw std::invalid_argument("VelocityProfile: " + *err);
}

double VelocityProfile::operator()(double x) const {
  if (x <= xs_.front()) return us_.front();
  if (x >= xs_.back()) return us_.back();
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin());  // x in [xs_{i-1}, xs_i)
  return us_[i - 1] + slope(i - 1) * (x - xs_[i - 1]);
}

double VelocityProfile::slope(std::size_t i) const {
  return (us_[i + 1] - us_[i]) / (xs_[i + 1] - xs_[i]);
}

double VelocityProfile::sup_norm() const {
  double m = 0.0;
  for (double u : us_) m = std::max(m, std::abs(u));
  return m;
}

double VelocityProfile::dirichlet_energy() const {
  double e = 0.0;
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    double s = slope(i);
    e += s * s * (xs_[i + 1] - xs_[i]);
  }
  return e;
}

}  // namespace hsx
