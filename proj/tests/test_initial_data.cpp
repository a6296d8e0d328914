// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#include "hsx/initial_data.hpp"

#include <cmath>
#include <ios>
#include <stdexcept>

#include "doctest.h"

using hsx::Atom;
using hsx::HybridMeasure;
using hsx::InitialData;
using hsx::VelocityProfile;

TEST_CASE("compact example decomposition") {
  InitialData d = InitialData::example_compact();
  CHECK(d.name() == "compact");
  CHECK(d.total_mass() == 1.0);
  CHECK(d.mu().breakpoints() == std::vector<double>{0.0, 1.0});
  CHECK(d.mu().densities() == std::vector<double>{1.0});
  CHECK(d.mu().atoms().empty());

  REQUIRE(d.breakpoint_count() == 2);
  REQUIRE(d.segment_count() == 3);
  CHECK(d.bp_alpha(0) == 0.0);
  CHECK(d.bp_alpha(1) == 2.0);
  CHECK(d.bp_x(0) == 0.0);
  CHECK(d.bp_x(1) == 1.0);
  CHECK(d.bp_u(0) == 0.0);
  CHECK(d.bp_u(1) == -1.0);
  CHECK(d.bp_w(0) == 0.0);
  CHECK(d.bp_w(1) == 1.0);

  CHECK(d.segment(0).slope == 0.0);
  CHECK(d.segment(0).f == 0.0);
  CHECK(d.segment(1).slope == -1.0);
  CHECK(d.segment(1).inv_1ps2 == 0.5);
  CHECK(d.segment(1).f == 0.5);
  CHECK(!d.segment(1).atom);
  CHECK(d.segment(2).f == 0.0);
}

TEST_CASE("dirac example decomposition") {
  InitialData d = InitialData::example_dirac(1.5, 4.0, -2.0);
  CHECK(d.total_mass() == 4.0);
  CHECK(d.mu().breakpoints().empty());
  REQUIRE(d.mu().atoms().size() == 1);
  CHECK(d.mu().atoms()[0] == Atom{-2.0, 4.0});

  REQUIRE(d.breakpoint_count() == 2);
  REQUIRE(d.segment_count() == 3);
  CHECK(d.bp_alpha(0) == -2.0);
  CHECK(d.bp_alpha(1) == 2.0);  // x0 + mass
  CHECK(d.bp_x(0) == -2.0);
  CHECK(d.bp_x(1) == -2.0);
  CHECK(d.bp_u(0) == 1.5);
  CHECK(d.bp_u(1) == 1.5);
  CHECK(d.bp_w(0) == 0.0);
  CHECK(d.bp_w(1) == 4.0);
  CHECK(d.segment(1).atom);
  CHECK(d.segment(1).mass == 4.0);
  CHECK(d.segment(1).inv_1ps2 == 0.0);
  CHECK(d.segment(1).f == 1.0);

  CHECK_THROWS_AS(InitialData::example_dirac(0.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(InitialData::example_dirac(0.0, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("atom interleaved with density") {
  // Slope 1 on (0,2) with an atom of mass 3 at x=1.
  InitialData d = InitialData::build(VelocityProfile({0.0, 2.0}, {0.0, 2.0}), {{1.0, 3.0}});
  CHECK(d.total_mass() == 5.0);
  REQUIRE(d.breakpoint_count() == 4);
  REQUIRE(d.segment_count() == 5);
  CHECK(d.bp_alpha(0) == 0.0);
  CHECK(d.bp_alpha(1) == 2.0);
  CHECK(d.bp_alpha(2) == 5.0);
  CHECK(d.bp_alpha(3) == 7.0);
  CHECK(d.bp_x(1) == 1.0);
  CHECK(d.bp_x(2) == 1.0);
  CHECK(d.bp_u(1) == 1.0);
  CHECK(d.bp_u(2) == 1.0);
  CHECK(d.bp_w(0) == 0.0);
  CHECK(d.bp_w(1) == 1.0);
  CHECK(d.bp_w(2) == 4.0);
  CHECK(d.bp_w(3) == 5.0);
  CHECK(d.segment(1).slope == 1.0);
  CHECK(d.segment(2).atom);
  CHECK(d.segment(3).slope == 1.0);
  CHECK(d.segment(4).f == 0.0);

  // segment_index is right-continuous at breakpoints.
  CHECK(d.segment_index(-1.0) == 0);
  CHECK(d.segment_index(0.0) == 1);
  CHECK(d.segment_index(1.9) == 1);
  CHECK(d.segment_index(2.0) == 2);
  CHECK(d.segment_index(3.0) == 2);
  CHECK(d.segment_index(5.0) == 3);
  CHECK(d.segment_index(7.0) == 4);
  CHECK(d.segment_index(100.0) == 4);
}

TEST_CASE("build sorts atoms and rejects bad ones") {
  InitialData d =
      InitialData::build(VelocityProfile::constant(0.0), {{2.0, 1.0}, {-1.0, 1.0}});
  REQUIRE(d.mu().atoms().size() == 2);
  CHECK(d.mu().atoms()[0].position == -1.0);
  CHECK(d.mu().atoms()[1].position == 2.0);

  CHECK_THROWS_AS(InitialData::build(VelocityProfile::constant(0.0), {{0.0, -1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(InitialData::build(VelocityProfile::constant(0.0), {{0.0, 1.0}, {0.0, 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("constant data has a single identity segment") {
  InitialData d = InitialData::build(VelocityProfile::constant(3.0), {});
  CHECK(d.total_mass() == 0.0);
  CHECK(d.breakpoint_count() == 0);
  REQUIRE(d.segment_count() == 1);
  CHECK(d.segment(0).inv_1ps2 == 1.0);
  CHECK(d.segment(0).f == 0.0);
  CHECK(d.segment_index(0.0) == 0);
}

TEST_CASE("sine tail interpolant") {
  InitialData d = InitialData::example_sine_tail(1.0, 5.0, 4);
  CHECK(d.name() == "sine:1,5,4");
  const VelocityProfile& u = d.u();
  REQUIRE(u.node_count() == 41);
  CHECK(u.xs().front() == -5.0);
  CHECK(u.xs().back() == 5.0);

  // For a = 1 the value at the boundary is the sine integral Si(5).
  CHECK(u(5.0) == doctest::Approx(1.5499312449446741).epsilon(1e-12));
  // The primitive of an odd integrand is even; the construction mirrors it.
  for (double x : {0.25, 1.0, 2.5, 3.75, 5.0}) CHECK(u(-x) == u(x));
  CHECK(u(0.0) == 0.0);

  // a < 1 exercises the singular-endpoint substitution; compare against a
  // brute-force Riemann value of the first cell integral.
  InitialData d2 = InitialData::example_sine_tail(2.0 / 3.0, 2.0, 2);
  double h = 0.5;
  double riemann = 0.0;
  int n = 200000;
  for (int i = 0; i < n; ++i) {
    double y = h * (i + 0.5) / n;
    riemann += std::sin(y) / std::pow(y, 2.0 / 3.0) * (h / n);
  }
  CHECK(d2.u()(h) == doctest::Approx(riemann).epsilon(1e-6));

  CHECK_THROWS_AS(InitialData::example_sine_tail(0.5, 5.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(InitialData::example_sine_tail(1.1, 5.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(InitialData::example_sine_tail(1.0, -5.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(InitialData::example_sine_tail(1.0, 5.0, 1), std::invalid_argument);
}

TEST_CASE("json round trip is exact") {
  InitialData d = InitialData::build(VelocityProfile({-1.0, 0.5, 2.0}, {0.25, -0.125, 1.0}),
                                     {{-0.75, 0.5}, {1.25, 2.0}}, "roundtrip");
  InitialData back = InitialData::load_json(d.save_json());
  CHECK(back == d);
  CHECK(back.name() == "roundtrip");

  InitialData plain = InitialData::load_json(R"({"u_nodes": [[0.0, 1.0]]})");
  CHECK(plain.name().empty());
  CHECK(plain.total_mass() == 0.0);
}

TEST_CASE("json schema violations are described") {
  auto reject = [](const std::string& text, const std::string& needle) {
    try {
      InitialData::load_json(text);
      FAIL_CHECK("expected rejection: " << text);
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  reject("not json", "parse error");
  reject("[1,2]", "object");
  reject("{}", "u_nodes");
  reject(R"({"u_nodes": []})", "u_nodes");
  reject(R"({"u_nodes": [[0]]})", "[x, u]");
  reject(R"({"u_nodes": [[0, "a"]]})", "number");
  reject(R"({"u_nodes": [[0, 0], [0, 1]]})", "increasing");
  reject(R"({"u_nodes": [[0, 0]], "atoms": [[0, 0]]})", "mass");
  reject(R"({"u_nodes": [[0, 0]], "atoms": [[0, 1], [0, 1]]})", "increasing");
  reject(R"({"u_nodes": [[0, 0], [1, 1]], "densities": [2.0]})", "incompatible");
  reject(R"({"u_nodes": [[0, 0], [1, 1]], "densities": [1.0, 1.0]})", "one value per");
  reject(R"({"u_nodes": [[0, 0]], "meta": {"name": 7}})", "string");

  // Densities matching the squared slopes are accepted.
  InitialData ok =
      InitialData::load_json(R"({"u_nodes": [[0, 0], [1, 1]], "densities": [1.0]})");
  CHECK(ok.mu().densities() == std::vector<double>{1.0});
}

TEST_CASE("load_file reports io errors") {
  CHECK_THROWS_AS(InitialData::load_file("/nonexistent/path/data.json"),
                  std::ios_base::failure);
}
