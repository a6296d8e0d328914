// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#include "hsx/solution.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hsx/cli.hpp"
#include "hsx/fuzz.hpp"

using namespace hsx;

TEST_CASE("compact example closed form before collapse") {
  InitialData d = InitialData::example_compact();
  for (double t : {0.0, 0.5, 1.0, 1.9}) {
    CAPTURE(t);
    double edge = (1.0 - 0.5 * t) * (1.0 - 0.5 * t);
    CHECK(evaluate_u(d, -1.0, t, EquationForm::A) == 0.0);
    for (double frac : {0.1, 0.5, 0.9}) {
      double x = frac * edge;
      CHECK(evaluate_u(d, x, t, EquationForm::A) ==
            doctest::Approx(-2.0 * x / (2.0 - t)).epsilon(1e-13));
    }
    CHECK(evaluate_u(d, edge + 1.0, t, EquationForm::A) ==
          doctest::Approx(-1.0 + 0.5 * t).epsilon(1e-14));
  }
}

TEST_CASE("compact slices are exact") {
  InitialData d = InitialData::example_compact();

  SolutionSlice s1 = slice(d, 1.0, EquationForm::A);
  CHECK(s1.u.xs() == std::vector<double>{0.0, 0.25});
  CHECK(s1.u.us() == std::vector<double>{0.0, -0.5});
  CHECK(s1.mu.densities() == std::vector<double>{4.0});
  CHECK(s1.singular_atoms.empty());
  CHECK(s1.provenance_density == std::vector<std::size_t>{1});
  CHECK(s1.mu.total_mass() == 1.0);

  // Collapse: all energy concentrates in a unit atom at the origin.
  SolutionSlice s2 = slice(d, 2.0, EquationForm::A);
  CHECK(s2.u.xs() == std::vector<double>{0.0});
  CHECK(s2.u.us() == std::vector<double>{0.0});
  REQUIRE(s2.singular_atoms.size() == 1);
  CHECK(s2.singular_atoms[0].position == 0.0);
  CHECK(s2.singular_atoms[0].mass == 1.0);
  CHECK(s2.mu.atoms() == s2.singular_atoms);
  CHECK(s2.mu.total_mass() == 1.0);
  CHECK(s2.provenance_atoms == std::vector<std::size_t>{1});

  // Past the collapse the profile re-expands with positive slope.
  SolutionSlice s3 = slice(d, 3.0, EquationForm::A);
  CHECK(s3.u.xs() == std::vector<double>{0.0, 0.25});
  CHECK(s3.u.us() == std::vector<double>{0.0, 0.5});
  CHECK(s3.mu.densities() == std::vector<double>{4.0});
  CHECK(s3.singular_atoms.empty());

  // Backward in time the ramp stretches instead.
  SolutionSlice sm = slice(d, -1.0, EquationForm::A);
  CHECK(sm.u.xs() == std::vector<double>{0.0, 2.25});
  CHECK(sm.u.us() == std::vector<double>{0.0, -1.5});
  CHECK(sm.mu.densities() == std::vector<double>{4.0 / 9.0});
  CHECK(sm.mu.total_mass() == 1.0);
}

TEST_CASE("velocity is continuous through the collapse") {
  InitialData d = InitialData::example_compact();
  CHECK(u_label(d, 0.0, 2.0, EquationForm::A) == u_label(d, 2.0, 2.0, EquationForm::A));
  CHECK(evaluate_u(d, 0.0, 2.0, EquationForm::A) == 0.0);
}

TEST_CASE("slice at t = 0 echoes the data with provenance") {
  InitialData d = InitialData::build(VelocityProfile({0.0, 2.0}, {0.0, 2.0}), {{1.0, 3.0}});
  SolutionSlice s = slice(d, 0.0, EquationForm::A);
  CHECK(s.u == d.u());
  CHECK(s.mu == d.mu());
  CHECK(s.singular_atoms == d.mu().atoms());
  CHECK(s.provenance_density == std::vector<std::size_t>{1});
  CHECK(s.provenance_atoms == std::vector<std::size_t>{2});
  CHECK(reinitialize(s) == InitialData::build(d.u(), d.mu().atoms()));

  // Constant data: single identity segment, empty measure at any time.
  SolutionSlice c = slice(InitialData::build(VelocityProfile::constant(2.0), {}), 5.0,
                          EquationForm::A);
  CHECK(c.u(123.0) == 2.0);
  CHECK(c.mu.is_zero());
}

TEST_CASE("dirac slices match the spreading formulas") {
  const double k = -0.5, ell = 4.0, x0 = 1.0;
  InitialData d = InitialData::example_dirac(k, ell, x0);
  for (double t : {0.5, 4.0, -2.0}) {
    CAPTURE(t);
    double lo_edge = x0 + k * t;  // the ramp spans (t^2/4) ell rightward of it
    double hi_edge = lo_edge + 0.25 * t * t * ell;
    for (double frac : {0.0, 0.25, 0.75, 1.0}) {
      double x = lo_edge + frac * (0.25 * t * t * ell);
      double want = k + (2.0 / t) * (x - x0 - k * t);
      CHECK(evaluate_u(d, x, t, EquationForm::A) ==
            doctest::Approx(want).epsilon(1e-13).scale(1.0 + std::fabs(want)));
    }
    CHECK(evaluate_u(d, lo_edge - 1.0, t, EquationForm::A) ==
          doctest::Approx(k).epsilon(1e-13));
    CHECK(evaluate_u(d, hi_edge + 1.0, t, EquationForm::A) ==
          doctest::Approx(k + 0.5 * t * ell).epsilon(1e-13));
    SolutionSlice s = slice(d, t, EquationForm::A);
    CHECK(s.mu.densities() == std::vector<double>{4.0 / (t * t)});
    CHECK(s.mu.total_mass() == doctest::Approx(ell).epsilon(1e-14));
    CHECK(s.singular_atoms.empty());
  }
}

TEST_CASE("semigroup restart through the collapse is exact") {
  InitialData d = InitialData::example_compact();
  InitialData mid = reinitialize(slice(d, 2.0, EquationForm::A), "restart");
  CHECK(mid.total_mass() == 1.0);
  REQUIRE(mid.mu().atoms().size() == 1);

  SolutionSlice direct = slice(d, 3.0, EquationForm::A);
  SolutionSlice stepped = slice(mid, 1.0, EquationForm::A);
  REQUIRE(stepped.u.node_count() == direct.u.node_count());
  for (std::size_t i = 0; i < direct.u.node_count(); ++i) {
    CHECK(stepped.u.xs()[i] == doctest::Approx(direct.u.xs()[i]).epsilon(1e-14));
    CHECK(stepped.u.us()[i] == doctest::Approx(direct.u.us()[i]).epsilon(1e-14));
  }
  CHECK(stepped.mu.densities() == direct.mu.densities());
}

TEST_CASE("singular mass ledger") {
  InitialData d = InitialData::example_compact();
  CHECK(singular_mass(d, 2.0) == 1.0);
  CHECK(singular_mass(d, 1.0) == 0.0);
  CHECK(singular_mass(d, 3.0) == 0.0);
  CHECK(singular_mass(d, 10.0) == 0.0);
  CHECK_THROWS_AS(singular_mass(d, 0.0), std::invalid_argument);

  // Slope -2 over a unit interval concentrates 4/t^2 * 1 at t = 1.
  InitialData steep = InitialData::build(VelocityProfile({0.0, 1.0}, {0.0, -2.0}), {});
  CHECK(singular_mass(steep, 1.0) == 4.0);

  // Two intervals sharing a slope concentrate together.
  InitialData twice =
      InitialData::build(VelocityProfile({0.0, 1.0, 1.5, 2.5}, {0.0, -1.0, -1.0, -2.0}), {});
  CHECK(singular_mass(twice, 2.0) == 2.0);
  CHECK(slice(twice, 2.0, EquationForm::A).singular_atoms.size() == 2);
}

TEST_CASE("profile assembly agrees with label evaluation on random data") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 40; ++rep) {
    InitialData d = fuzz::random_initial_data(rng);
    double t = fuzz::random_safe_time(rng, d, -20.0, 20.0);
    EquationForm form = rep % 2 ? EquationForm::A : EquationForm::B;
    SolutionSlice s = slice(d, t, form);
    double scale =
        1.0 + d.u().sup_norm() + std::fabs(t) * d.total_mass() + d.total_mass() * t * t;
    std::uniform_real_distribution<double> px(s.u.xs().front() - 3.0, s.u.xs().back() + 3.0);
    for (int i = 0; i < 30; ++i) {
      double x = px(rng);
      CHECK(std::fabs(s.u(x) - evaluate_u(d, x, t, form)) <= 1e-9 * scale);
    }
    auto msg = verify::check_conservation(d, s);
    CHECK_MESSAGE(!msg, msg.value_or(""));
    msg = verify::check_compatibility(s);
    CHECK_MESSAGE(!msg, msg.value_or(""));
    CHECK(s.singular_atoms.empty());  // safe times sit away from every collapse
  }
}

namespace {

// Method-of-lines oracle: central differences for u_x, trapezoidal cumulative
// energy for the source, classical RK4 in time. Valid while the solution
// stays smooth, which the data below guarantees on [0, T].
std::vector<double> mol_evolve(const InitialData& d, double T, int steps, int n, double lo,
                               double hi, EquationForm form, std::vector<double>& grid) {
  double dx = (hi - lo) / n;
  grid.resize(n + 1);
  std::vector<double> u(n + 1);
  for (int i = 0; i <= n; ++i) {
    grid[i] = lo + i * dx;
    u[i] = d.u()(grid[i]);
  }
  double offset = form == EquationForm::B ? 0.25 * d.total_mass() : 0.0;
  std::vector<double> ux(n + 1), cum(n + 1);
  auto rhs = [&](const std::vector<double>& v) {
    for (int i = 1; i < n; ++i) ux[i] = (v[i + 1] - v[i - 1]) / (2.0 * dx);
    ux[0] = ux[n] = 0.0;
    cum[0] = 0.0;
    for (int i = 1; i <= n; ++i)
      cum[i] = cum[i - 1] + 0.5 * (ux[i - 1] * ux[i - 1] + ux[i] * ux[i]) * dx;
    std::vector<double> r(n + 1);
    for (int i = 0; i <= n; ++i) r[i] = -v[i] * ux[i] + 0.5 * cum[i] - offset;
    return r;
  };
  double dt = T / steps;
  std::vector<double> tmp(n + 1);
  for (int s = 0; s < steps; ++s) {
    auto k1 = rhs(u);
    for (int i = 0; i <= n; ++i) tmp[i] = u[i] + 0.5 * dt * k1[i];
    auto k2 = rhs(tmp);
    for (int i = 0; i <= n; ++i) tmp[i] = u[i] + 0.5 * dt * k2[i];
    auto k3 = rhs(tmp);
    for (int i = 0; i <= n; ++i) tmp[i] = u[i] + dt * k3[i];
    auto k4 = rhs(tmp);
    for (int i = 0; i <= n; ++i)
      u[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return u;
}

InitialData smooth_bump_data() {
  std::vector<double> xs, us;
  for (int i = 0; i <= 120; ++i) {
    double x = -3.0 + 0.05 * i;
    xs.push_back(x);
    us.push_back(0.3 * std::exp(-x * x));
  }
  return InitialData::build(VelocityProfile(std::move(xs), std::move(us)), {});
}

}  // namespace

TEST_CASE("characteristics solution matches a PDE integrator") {
  InitialData d = smooth_bump_data();
  const double T = 0.4;
  for (EquationForm form : {EquationForm::A, EquationForm::B}) {
    CAPTURE(form == EquationForm::A);
    std::vector<double> grid;
    std::vector<double> u = mol_evolve(d, T, 400, 4096, -8.0, 8.0, form, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i] < -2.5 || grid[i] > 2.5) continue;  // stay clear of the grid boundary
      worst = std::max(worst, std::fabs(u[i] - evaluate_u(d, grid[i], T, form)));
    }
    CHECK(worst <= 5e-3);
  }
}

TEST_CASE("weak residuals vanish under refinement") {
  InitialData d = InitialData::example_compact();
  BumpTestFunction phi{0.5, 2.0, 1.2, 0.7};  // support straddles the t = 2 collapse
  Box box{-2.0, 3.0, 1.0, 3.0};
  WeakResidual r12 = weak_residual(d, phi, box, 12, 12, EquationForm::A);
  WeakResidual r48 = weak_residual(d, phi, box, 48, 48, EquationForm::A);
  CHECK(std::fabs(r48.momentum) <= 1e-6);
  CHECK(std::fabs(r48.energy) <= 1e-6);
  CHECK(std::fabs(r48.momentum) <= std::max(std::fabs(r12.momentum), 1e-9));
  CHECK(std::fabs(r48.energy) <= std::max(std::fabs(r12.energy), 1e-9));

  // An atom spreading from t = 0 (time panels cut there).
  InitialData a = InitialData::example_dirac(0.25, 1.0, 0.0);
  BumpTestFunction phi2{0.0, 0.0, 2.0, 0.8};
  WeakResidual ra = weak_residual(a, phi2, Box{-3.0, 3.0, -1.0, 1.0}, 48, 48,
                                  EquationForm::B);
  CHECK(std::fabs(ra.momentum) <= 1e-6);
  CHECK(std::fabs(ra.energy) <= 1e-6);

  // Support outside the time window integrates to exactly zero.
  WeakResidual none = weak_residual(d, phi, Box{-2.0, 3.0, 5.0, 9.0}, 8, 8, EquationForm::A);
  CHECK(none.momentum == 0.0);
  CHECK(none.energy == 0.0);

  CHECK_THROWS_AS(weak_residual(d, BumpTestFunction{0.0, 2.0, -1.0, 1.0}, box, 8, 8,
                                EquationForm::A),
                  std::invalid_argument);
  CHECK_THROWS_AS(weak_residual(d, BumpTestFunction{0.0, 2.0, 10.0, 0.5}, box, 8, 8,
                                EquationForm::A),
                  std::invalid_argument);
  CHECK_THROWS_AS(weak_residual(d, phi, box, 0, 8, EquationForm::A), std::invalid_argument);
}

TEST_CASE("bump test function calculus") {
  BumpTestFunction phi{0.5, 1.0, 2.0, 1.5};
  CHECK(BumpTestFunction::shape(0.0) == 1.0);
  CHECK(BumpTestFunction::shape(1.0) == 0.0);
  CHECK(BumpTestFunction::shape(-1.0) == 0.0);
  CHECK(BumpTestFunction::shape(2.0) == 0.0);
  CHECK(phi.value(0.5 + 2.0, 1.0) == 0.0);
  CHECK(phi.value(0.5, 1.0 + 1.5) == 0.0);
  CHECK(phi.value(0.5, 1.0) == 1.0);

  const double h = 1e-5;
  for (double x : {-0.8, 0.3, 1.9}) {
    for (double t : {0.2, 1.0, 2.2}) {
      double fdx = (phi.value(x + h, t) - phi.value(x - h, t)) / (2.0 * h);
      double fdt = (phi.value(x, t + h) - phi.value(x, t - h)) / (2.0 * h);
      CHECK(phi.dx(x, t) == doctest::Approx(fdx).epsilon(1e-7).scale(1.0));
      CHECK(phi.dt(x, t) == doctest::Approx(fdt).epsilon(1e-7).scale(1.0));
    }
  }
}

TEST_CASE("slice at the blow-up of one slope keeps the rest absolutely continuous") {
  // Slopes -1 (collapses at t = 2) and +1 (never collapses).
  InitialData d =
      InitialData::build(VelocityProfile({0.0, 1.0, 2.0}, {0.0, -1.0, 0.0}), {});
  SolutionSlice s = slice(d, 2.0, EquationForm::A);
  REQUIRE(s.singular_atoms.size() == 1);
  CHECK(s.singular_atoms[0].mass == 1.0);
  CHECK(s.mu.densities().size() == 1);  // the +1 segment survives
  CHECK(s.mu.total_mass() == doctest::Approx(2.0).epsilon(1e-14));
  auto msg = verify::check_compatibility(s);
  CHECK_MESSAGE(!msg, msg.value_or(""));
}
