// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#include "hsx/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsx {

namespace {

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

std::optional<std::string> HybridMeasure::check(const std::vector<double>& breakpoints,
                                                const std::vector<double>& densities,
                                                const std::vector<Atom>& atoms) {
  if (!all_finite(breakpoints)) return "density breakpoint is not finite";
  if (!all_finite(densities)) return "density value is not finite";
  if (breakpoints.size() == 1) return "a lone density breakpoint bounds no interval";
  if (!breakpoints.empty() && densities.size() + 1 != breakpoints.size())
    return "density value count must be breakpoint count - 1";
  if (breakpoints.empty() && !densities.empty())
    return "density values without breakpoints";
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i - 1] < breakpoints[i]))
      return "density breakpoints not strictly increasing at index " + std::to_string(i);
  for (std::size_t i = 0; i < densities.size(); ++i)
    if (!(densities[i] >= 0.0))
      return "negative density on interval " + std::to_string(i);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!std::isfinite(atoms[i].position) || !std::isfinite(atoms[i].mass))
      return "atom " + std::to_string(i) + " is not finite";
    if (!(atoms[i].mass > 0.0)) return "atom " + std::to_string(i) + " has nonpositive mass";
    if (i > 0 && !(atoms[i - 1].position < atoms[i].position))
      return "atom positions not strictly increasing at index " + std::to_string(i);
  }
  return std::nullopt;
}

HybridMeasure::HybridMeasure(std::vector<double> breakpoints, std::vector<double> densities,
                             std::vector<Atom> atoms)
    : breakpoints_(std::move(breakpoints)),
      densities_(std::move(densities)),
      atoms_(std::move(atoms)) {
  if (auto err = check(breakpoints_, densities_, atoms_))
    throw std::invalid_argument("HybridMeasure: " + *err);
  cum_ac_.assign(breakpoints_.size(), 0.0);
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    cum_ac_[i] = cum_ac_[i - 1] + densities_[i - 1] * (breakpoints_[i] - breakpoints_[i - 1]);
  ac_mass_ = cum_ac_.empty() ? 0.0 : cum_ac_.back();
  total_mass_ = ac_mass_;
  for (const Atom& a : atoms_) total_mass_ += a.mass;
}

std::optional<std::string> HybridMeasure::validate() const {
  return check(breakpoints_, densities_, atoms_);
}

double HybridMeasure::cdf(double x, bool closed) const {
  double m = 0.0;
  if (!breakpoints_.empty() && x > breakpoints_.front()) {
    if (x >= breakpoints_.back()) {
      m = ac_mass_;
    } else {
      auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
      std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());  // x in [bp_{i-1}, bp_i)
      m = cum_ac_[i - 1] + densities_[i - 1] * (x - breakpoints_[i - 1]);
    }
  }
  for (const Atom& a : atoms_) {
    if (a.position < x || (closed && a.position == x)) m += a.mass;
    if (a.position >= x) break;
  }
  return m;
}

double HybridMeasure::tail_mass(Side side, double threshold) const {
  if (!(threshold > 0.0)) throw std::invalid_argument("tail_mass: threshold must be > 0");
  if (side == Side::left) return cdf(-threshold, /*closed=*/false);
  return total_mass_ - cdf(threshold, /*closed=*/true);
}

std::optional<double> HybridMeasure::support_min() const {
  std::optional<double> r;
  for (std::size_t i = 0; i < densities_.size(); ++i) {
    if (densities_[i] > 0.0) {
      r = breakpoints_[i];
      break;
    }
  }
  if (!atoms_.empty()) {
    double p = atoms_.front().position;
    if (!r || p < *r) r = p;
  }
  return r;
}

std::optional<double> HybridMeasure::support_max() const {
  std::optional<double> r;
  for (std::size_t i = densities_.size(); i-- > 0;) {
    if (densities_[i] > 0.0) {
      r = breakpoints_[i + 1];
      break;
    }
  }
  if (!atoms_.empty()) {
    double p = atoms_.back().position;
    if (!r || p > *r) r = p;
  }
  return r;
}

}  // namespace hsx
