// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>

#include "hsx/initial_data.hpp"

namespace hsx::fuzz {

/// Random piecewise linear velocity (up to max_nodes nodes) plus up to
/// max_atoms point masses, spanning a few units around the origin.
InitialData random_initial_data(std::mt19937_64& rng, int max_nodes = 20,
                                int max_atoms = 5);

/// Uniform time in [lo, hi], resampled until every velocity slope s keeps
/// |1 + t s / 2| >= margin. Near a collapse the image cells are narrower than
/// one ulp of their coordinates, so representation-level checks (mass from
/// breakpoint differences, pointwise comparisons) are ill conditioned there;
/// the default margin keeps the roundoff budget under 1e-12 relative for
/// |t| <= 100. Exact collapse behavior is covered by deterministic examples.
double random_safe_time(std::mt19937_64& rng, const InitialData& d, double lo,
                        double hi, double margin = 0.15);

}  // namespace hsx::fuzz
