// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#include "hsx/fuzz.hpp"

#include <cmath>
#include <stdexcept>

namespace hsx::fuzz {

InitialData random_initial_data(std::mt19937_64& rng, int max_nodes, int max_atoms) {
  std::uniform_int_distribution<int> node_count(1, max_nodes);
  std::uniform_int_distribution<int> atom_count(0, max_atoms);
  std::uniform_real_distribution<double> start(-5.0, 0.0);
  std::uniform_real_distribution<double> gap(0.25, 1.0);
  std::uniform_real_distribution<double> level(-3.0, 3.0);
  std::uniform_real_distribution<double> mass(0.1, 2.0);

  int n = node_count(rng);
  std::vector<double> xs(n), us(n);
  xs[0] = start(rng);
  us[0] = level(rng);
  for (int i = 1; i < n; ++i) {
    xs[i] = xs[i - 1] + gap(rng);
    us[i] = level(rng);
  }
  std::vector<Atom> atoms(atom_count(rng));
  std::uniform_real_distribution<double> pos(xs.front() - 2.0, xs.back() + 2.0);
  for (Atom& a : atoms) a = {pos(rng), mass(rng)};
  return InitialData::build(VelocityProfile(xs, us), atoms, "fuzz");
}

double random_safe_time(std::mt19937_64& rng, const InitialData& d, double lo,
                        double hi, double margin) {
  std::uniform_real_distribution<double> time(lo, hi);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    double t = time(rng);
    bool safe = true;
    for (std::size_t i = 0; i < d.u().interval_count() && safe; ++i)
      safe = std::fabs(1.0 + 0.5 * t * d.u().slope(i)) >= margin;
    if (safe) return t;
  }
  throw std::runtime_error("random_safe_time: no admissible time found");
}

}  // namespace hsx::fuzz
