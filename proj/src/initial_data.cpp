// Copyright (C) 2026 the hsx authors
// SPDX-License-Identifier: Apache-2.0

#include "hsx/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "hsx/quadrature.hpp"

namespace hsx {

namespace {

std::string fmt_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

InitialData InitialData::build(VelocityProfile u, std::vector<Atom> atoms, std::string name) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.position < b.position; });
  return InitialData(std::move(u), std::move(atoms), std::move(name));
}

InitialData::InitialData(VelocityProfile u, std::vector<Atom> atoms, std::string name)
    : u_(std::move(u)), atoms_(std::move(atoms)), name_(std::move(name)) {
  // Canonical measure: squared profile slopes on the profile intervals plus
  // the atoms. The constructor re-validates atom ordering and positivity.
  std::vector<double> rho(u_.interval_count());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    double s = u_.slope(i);
    rho[i] = s * s;
  }
  std::vector<double> bps = rho.empty() ? std::vector<double>{} : u_.xs();
  mu_ = HybridMeasure(std::move(bps), std::move(rho), atoms_);

  // Merge profile nodes and atom positions into one increasing position list.
  struct Pos {
    double x;
    double atom_mass;  // 0 when no atom sits here
  };
  std::vector<Pos> pos;
  pos.reserve(u_.node_count() + atoms_.size());
  for (double x : u_.xs()) pos.push_back({x, 0.0});
  for (const Atom& a : atoms_) pos.push_back({a.position, a.mass});
  std::sort(pos.begin(), pos.end(), [](const Pos& a, const Pos& b) { return a.x < b.x; });
  std::vector<Pos> merged;
  for (const Pos& p : pos) {
    if (!merged.empty() && merged.back().x == p.x)
      merged.back().atom_mass += p.atom_mass;
    else
      merged.push_back(p);
  }

  if (merged.size() == 1 && merged.front().atom_mass == 0.0) {
    // Constant velocity, zero measure: a single unbounded identity segment.
    segments_.push_back({0.0, 1.0, 0.0, false, 0.0});
    return;
  }

  // Walk left to right keeping the exact accumulated mass w; each position
  // contributes a breakpoint (two around an atom), each gap an a.c. segment.
  segments_.push_back({0.0, 1.0, 0.0, false, 0.0});  // left tail
  double w = 0.0;
  for (std::size_t j = 0; j < merged.size(); ++j) {
    double x = merged[j].x;
    double ux = u_(x);
    bp_alpha_.push_back(x + w);
    bp_x_.push_back(x);
    bp_u_.push_back(ux);
    bp_w_.push_back(w);
    if (merged[j].atom_mass > 0.0) {
      segments_.push_back({0.0, 0.0, 1.0, true, merged[j].atom_mass});
      w += merged[j].atom_mass;
      bp_alpha_.push_back(x + w);
      bp_x_.push_back(x);
      bp_u_.push_back(ux);
      bp_w_.push_back(w);
    }
    if (j + 1 < merged.size()) {
      double x2 = merged[j + 1].x;
      double s = 0.0;
      double mid = x + 0.5 * (x2 - x);
      const auto& xs = u_.xs();
      if (mid > xs.front() && mid < xs.back()) {
        auto it = std::upper_bound(xs.begin(), xs.end(), mid);
        s = u_.slope(static_cast<std::size_t>(it - xs.begin()) - 1);
      }
      double inv = 1.0 / (1.0 + s * s);
      double f = s * s * inv;
      segments_.push_back({s, inv, f, false, 0.0});
      w += s * s * (x2 - x);
    }
  }
  segments_.push_back({0.0, 1.0, 0.0, false, 0.0});  // right tail
}

std::size_t InitialData::segment_index(double alpha) const {
  auto it = std::upper_bound(bp_alpha_.begin(), bp_alpha_.end(), alpha);
  return static_cast<std::size_t>(it - bp_alpha_.begin());
}

InitialData InitialData::example_dirac(double k, double ell, double x0) {
  if (!(ell > 0.0)) throw std::invalid_argument("example_dirac: ell must be > 0");
  if (!std::isfinite(k) || !std::isfinite(x0))
    throw std::invalid_argument("example_dirac: parameters must be finite");
  std::string name = "dirac:" + fmt_param(k) + "," + fmt_param(ell) + "," + fmt_param(x0);
  return build(VelocityProfile({x0}, {k}), {{x0, ell}}, std::move(name));
}

InitialData InitialData::example_compact() {
  return build(VelocityProfile({0.0, 1.0}, {0.0, -1.0}), {}, "compact");
}

InitialData InitialData::example_sine_tail(double a, double radius, int nodes_per_unit) {
  if (!(a > 0.5) || !(a <= 1.0))
    throw std::invalid_argument("example_sine_tail: a must lie in (1/2, 1]");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("example_sine_tail: radius must be positive");
  if (nodes_per_unit < 2)
    throw std::invalid_argument("example_sine_tail: nodes_per_unit must be > 1");

  const long m = std::lround(radius * nodes_per_unit);
  if (m < 1) throw std::invalid_argument("example_sine_tail: radius too small for node density");
  const double h = 1.0 / nodes_per_unit;
  const GaussRule& g = gauss_rule(8);

  auto cell_integral = [&](double lo, double hi) {
    // integral of sin(y)/y^a over [lo, hi], 0 <= lo < hi
    double r = 0.0;
    if (lo == 0.0 && a < 1.0) {
      // substitute y = z^(1/(1-a)) to remove the endpoint singularity
      double p = 1.0 - a;
      double zhi = std::pow(hi, p);
      for (int i = 0; i < 8; ++i) {
        double z = 0.5 * zhi * (g.nodes[i] + 1.0);
        r += g.weights[i] * std::sin(std::pow(z, 1.0 / p));
      }
      return r * 0.5 * zhi / p;
    }
    for (int i = 0; i < 8; ++i) {
      double y = lo + 0.5 * (hi - lo) * (g.nodes[i] + 1.0);
      r += g.weights[i] * std::sin(y) / std::pow(y, a);
    }
    return r * 0.5 * (hi - lo);
  };

  // ubar is even, so integrate the right half and mirror.
  std::vector<double> right(static_cast<std::size_t>(m) + 1, 0.0);
  for (long j = 1; j <= m; ++j)
    right[static_cast<std::size_t>(j)] =
        right[static_cast<std::size_t>(j - 1)] + cell_integral((j - 1) * h, j * h);

  std::vector<double> xs, us;
  xs.reserve(2 * static_cast<std::size_t>(m) + 1);
  us.reserve(xs.capacity());
  for (long j = -m; j <= m; ++j) {
    xs.push_back(j * h);
    us.push_back(right[static_cast<std::size_t>(std::labs(j))]);
  }
  std::string name = "sine:" + fmt_param(a) + "," + fmt_param(radius) + "," +
                     std::to_string(nodes_per_unit);
  return build(VelocityProfile(std::move(xs), std::move(us)), {}, std::move(name));
}

namespace {

using nlohmann::json;

double require_finite(const json& v, const char* what) {
  if (!v.is_number()) throw std::runtime_error(std::string("input: ") + what + " must be a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) throw std::runtime_error(std::string("input: ") + what + " is not finite");
  return d;
}

}  // namespace

std::string InitialData::save_json() const {
  json doc;
  doc["u_nodes"] = json::array();
  for (std::size_t i = 0; i < u_.node_count(); ++i)
    doc["u_nodes"].push_back({u_.xs()[i], u_.us()[i]});
  doc["atoms"] = json::array();
  for (const Atom& a : atoms_) doc["atoms"].push_back({a.position, a.mass});
  if (!name_.empty()) doc["meta"] = {{"name", name_}};
  return doc.dump(2);
}

InitialData InitialData::load_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("input: JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("input: document must be a JSON object");
  if (!doc.contains("u_nodes") || !doc["u_nodes"].is_array() || doc["u_nodes"].empty())
    throw std::runtime_error("input: u_nodes must be a nonempty array");

  std::vector<double> xs, us;
  for (std::size_t i = 0; i < doc["u_nodes"].size(); ++i) {
    const json& node = doc["u_nodes"][i];
    if (!node.is_array() || node.size() != 2)
      throw std::runtime_error("input: u_nodes[" + std::to_string(i) + "] must be [x, u]");
    xs.push_back(require_finite(node[0], "u_nodes x"));
    us.push_back(require_finite(node[1], "u_nodes u"));
  }
  if (auto err = VelocityProfile::check(xs, us)) throw std::runtime_error("input: " + *err);
  VelocityProfile u(xs, us);

  std::vector<Atom> atoms;
  if (doc.contains("atoms")) {
    if (!doc["atoms"].is_array()) throw std::runtime_error("input: atoms must be an array");
    for (std::size_t i = 0; i < doc["atoms"].size(); ++i) {
      const json& at = doc["atoms"][i];
      if (!at.is_array() || at.size() != 2)
        throw std::runtime_error("input: atoms[" + std::to_string(i) + "] must be [x, mass]");
      atoms.push_back({require_finite(at[0], "atom position"), require_finite(at[1], "atom mass")});
    }
    if (auto err = HybridMeasure::check({}, {}, atoms)) throw std::runtime_error("input: " + *err);
  }

  // Legacy documents may carry densities; they are never trusted, only
  // checked against the squared slopes the profile implies.
  if (doc.contains("densities")) {
    const json& ds = doc["densities"];
    if (!ds.is_array() || ds.size() != u.interval_count())
      throw std::runtime_error("input: densities must have one value per profile interval");
    for (std::size_t i = 0; i < ds.size(); ++i) {
      double rho = require_finite(ds[i], "density");
      double s = u.slope(i);
      double want = s * s;
      if (std::abs(rho - want) > 1e-12 * std::max(1.0, want))
        throw std::runtime_error("input: densities[" + std::to_string(i) +
                                 "] = " + std::to_string(rho) +
                                 " incompatible with squared slope " + std::to_string(want));
    }
  }

  std::string name;
  if (doc.contains("meta") && doc["meta"].is_object() && doc["meta"].contains("name")) {
    if (!doc["meta"]["name"].is_string())
      throw std::runtime_error("input: meta.name must be a string");
    name = doc["meta"]["name"].get<std::string>();
  }
  return build(std::move(u), std::move(atoms), std::move(name));
}

InitialData InitialData::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::ios_base::failure("cannot read input file: " + path);
  return load_json(ss.str());
}

}  // namespace hsx
