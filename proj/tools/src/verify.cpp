// Copyright 2026 The quadfillet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quadfillet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>

#include <json.hpp>

#include "quadfillet/error.hpp"
#include "quadfillet/fillet.hpp"
#include "quadfillet/solid.hpp"

namespace quadfillet::cli {
namespace {

constexpr int kCirclePoints = 32;
constexpr int kConicPoints = 32;
constexpr double kGradientTolerance = 1e-12;
constexpr double kIdentityTolerance = 1e-12;
constexpr double kResidualLawTolerance = 1e-12;
constexpr double kConicResidualTolerance = 1e-10;
constexpr double kConicAngleTolerance = 1e-7;
constexpr double kResidualLawAlphaScale = 1.5;  // alpha * beta = 3/8 instead of 1/4
constexpr double kBetaGrid[] = {0.6, 0.8, 1.0, 1.25, 1.5};

std::string fillet_name(const FilletPatch& p) { return p.hub + ";" + p.beam_i + ";" + p.beam_j; }

CheckResult bounded(std::string name, double measured, double tolerance, std::string worst) {
  CheckResult r{std::move(name), CheckStatus::Pass, measured, tolerance, {}};
  if (!(measured <= tolerance)) {
    r.status = CheckStatus::Fail;
    r.detail = "worst at " + worst;
  }
  return r;
}

// Points of the circle where the plane {g = 0} cuts the hub sphere.
std::vector<Vec3> tangency_circle(const Vec3& c, double r, const LinearForm& g) {
  const double gn = norm(g.g);
  const Vec3 n = g.g / gn;
  const double d = -g(c) / gn;
  const double rho = std::sqrt(std::max(0.0, r * r - d * d));
  const Vec3 seed = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 u = normalized(cross(n, seed));
  const Vec3 v = cross(n, u);
  std::vector<Vec3> out;
  for (int i = 0; i < kCirclePoints; ++i) {
    const double t = 2.0 * std::numbers::pi * i / kCirclePoints;
    out.push_back(c + d * n + rho * (std::cos(t) * u + std::sin(t) * v));
  }
  return out;
}

double relative_residual(const Quadric& q, const Vec3& p) {
  return std::abs(q(p)) / std::max(1.0, residual_scale(q, p));
}

double gradient_angle(const Vec3& a, const Vec3& b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

bool strictly_monotone(const std::vector<double>& v) {
  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    up = up && v[i] > v[i - 1];
    down = down && v[i] < v[i - 1];
  }
  return up || down;
}

void stub_checks(const Assembly& assembly, double tol, std::vector<CheckResult>& out) {
  double worst_membership = 0.0;
  double worst_gradient = 0.0;
  std::string where_membership = "-";
  std::string where_gradient = "-";
  for (const BeamPart& b : assembly.beams) {
    const BeamGeometry& g = b.geometry;
    const std::pair<const LinearForm*, std::pair<Vec3, double>> ends[] = {
        {&g.G_a, {g.center_a, g.radius_a}}, {&g.G_b, {g.center_b, g.radius_b}}};
    for (const auto& [plane, hub] : ends) {
      const Quadric S = sphere_quadric({"", hub.first, hub.second});
      for (const Vec3& p : tangency_circle(hub.first, hub.second, *plane)) {
        const double m = std::max(relative_residual(g.H, p), relative_residual(S, p));
        if (m > worst_membership) {
          worst_membership = m;
          where_membership = b.id;
        }
        const Vec3 gs = gradient(S, p);
        const double d = norm(gradient(g.H, p) - gs) / norm(gs);
        if (d > worst_gradient) {
          worst_gradient = d;
          where_gradient = b.id;
        }
      }
    }
  }
  out.push_back(bounded("two_sphere_tangency", worst_membership, tol, where_membership));
  out.push_back(bounded("sphere_stub_gradient", worst_gradient, kGradientTolerance, where_gradient));
}

void fillet_checks(const std::vector<FilletPatch>& patches, std::vector<CheckResult>& out) {
  double identity = 0.0;
  double law = 0.0;
  double residual = 0.0;
  double angle = 0.0;
  std::string w_identity = "-", w_law = "-", w_residual = "-", w_angle = "-";
  std::vector<std::string> not_curves;
  for (const FilletPatch& p : patches) {
    const std::string name = fillet_name(p);
    if (const double d = identity_deviation(p); !(d <= identity) ) {
      identity = d;
      w_identity = name;
    }

    const double alpha = kResidualLawAlphaScale / (4.0 * p.beta);
    const FilletPlanes planes = fillet_planes_unconstrained(p.stub1.G, p.stub2.G, alpha, p.beta);
    const Quadric r = fillet_residual(p.stub1.H, p.stub2.H, planes.E1, planes.E2);
    const Quadric expected = (1.0 - 4.0 * alpha * p.beta) * product(planes.F_plus, planes.F_minus);
    if (const double d = relative_coefficient_deviation(r, expected); !(d <= law)) {
      law = d;
      w_law = name;
    }

    const std::pair<const Conic*, const Quadric*> sides[] = {{&p.conic1, &p.stub1.H}, {&p.conic2, &p.stub2.H}};
    for (const auto& [conic, stub] : sides) {
      std::vector<Vec3> pts;
      try {
        pts = sample_conic(*conic, kConicPoints);
      } catch (const Error&) {
        not_curves.push_back(name);
        continue;
      }
      for (const Vec3& x : pts) {
        const double m = std::max(relative_residual(*stub, x), relative_residual(p.Q, x));
        if (!(m <= residual)) {
          residual = m;
          w_residual = name;
        }
        const double a = gradient_angle(gradient(p.Q, x), gradient(*stub, x));
        if (!(a <= angle)) {
          angle = a;
          w_angle = name;
        }
      }
    }
  }
  CheckResult id = bounded("fillet_identity", identity, kIdentityTolerance, w_identity);
  if (id.status == CheckStatus::Fail) id.detail = "IDENTITY_VIOLATION " + id.detail;
  out.push_back(std::move(id));
  out.push_back(bounded("residual_law", law, kResidualLawTolerance, w_law));
  out.push_back(bounded("conic_surface_residual", residual, kConicResidualTolerance, w_residual));
  out.push_back(bounded("conic_gradient_angle", angle, kConicAngleTolerance, w_angle));
  if (!not_curves.empty()) {
    std::string detail = "tangency set is not a curve at";
    for (const auto& n : not_curves) detail += " " + n;
    out.push_back({"conic_sampling", CheckStatus::Warn, static_cast<double>(not_curves.size()), 0.0, detail});
  }
}

void material_check(const Lattice& lattice, const Assembly& filleted, const VerifyOptions& options,
                    std::vector<CheckResult>& out) {
  Lattice plain_lattice = lattice;
  plain_lattice.fillets.clear();
  const Assembly plain = build_assembly(plain_lattice);
  const Box box = auto_bounds(filleted);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int lost = 0;
  int gained = 0;
  for (int i = 0; i < options.samples; ++i) {
    const Vec3 s = box.size();
    const Vec3 p{box.lo.x + s.x * unit(rng), box.lo.y + s.y * unit(rng), box.lo.z + s.z * unit(rng)};
    const bool before = field_value(plain, p) < -options.tol;
    const bool after = field_value(filleted, p) < -options.tol;
    lost += before && !after;
    gained += !before && after;
  }
  CheckResult r{"material_monotonicity", CheckStatus::Pass, static_cast<double>(lost), 0.0,
                std::to_string(gained) + " of " + std::to_string(options.samples) +
                    " samples gained material"};
  if (lost > 0) r.status = CheckStatus::Fail;
  else if (gained == 0 && !lattice.fillets.empty()) r.status = CheckStatus::Warn;
  out.push_back(std::move(r));
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (double x : v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    out += (out.empty() ? "" : " ") + std::string(buf);
  }
  return out;
}

// Extent over the beta grid must be strictly monotone. The bisector
// curvature radius is reported, and flagged as a warning when it is not
// monotone: on the perpendicular fixture it peaks between 0.8 and 1.0.
void fan_check(const std::vector<FilletPatch>& patches, std::vector<CheckResult>& out) {
  if (patches.empty()) return;
  CheckResult extent{"extent_monotonicity", CheckStatus::Pass, 0.0, 0.0, {}};
  CheckResult curvature{"curvature_monotonicity", CheckStatus::Pass, 0.0, 0.0, {}};
  auto note = [](CheckResult& r, CheckStatus status, const std::string& text) {
    if (r.status != CheckStatus::Fail) r.status = status;
    if (status == CheckStatus::Fail) r.measured += 1.0;
    r.detail += (r.detail.empty() ? "" : "; ") + text;
  };
  for (const FilletPatch& p : patches) {
    const std::string name = fillet_name(p);
    std::vector<double> extents;
    std::vector<double> radii;
    std::string problem;
    for (double beta : kBetaGrid) {
      try {
        const FilletPatch q = build_fillet(p.stub1, p.stub2, beta);
        if (!q.extent) {
          problem = "unbounded fillet at beta " + join({beta});
          break;
        }
        extents.push_back(*q.extent);
        radii.push_back(fillet_min_curvature_radius(q));
      } catch (const Error& e) {
        problem = e.what();
        break;
      }
    }
    if (!problem.empty()) {
      note(extent, CheckStatus::Warn, name + ": " + problem);
      continue;
    }
    if (!strictly_monotone(extents)) note(extent, CheckStatus::Fail, name + ": extents " + join(extents));
    if (!strictly_monotone(radii)) note(curvature, CheckStatus::Warn, name + ": radii " + join(radii));
  }
  out.push_back(std::move(extent));
  out.push_back(std::move(curvature));
}

void warning_check(const Assembly& assembly, std::vector<CheckResult>& out) {
  std::vector<ValidationIssue> warnings;
  for (const ValidationIssue& i : assembly.validation.issues)
    if (i.severity == Severity::Warning) warnings.push_back(i);
  for (ValidationIssue& i : assembly_warnings(assembly)) warnings.push_back(std::move(i));
  CheckResult r{"lattice_warnings", CheckStatus::Pass, static_cast<double>(warnings.size()), 0.0, {}};
  for (const ValidationIssue& w : warnings) {
    r.status = CheckStatus::Warn;
    r.detail += (r.detail.empty() ? "" : "; ") + w.code + " " + w.subject;
  }
  out.push_back(std::move(r));
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Warn: return "warn";
  }
  return "fail";
}

int VerifyReport::count(CheckStatus status) const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == status; }));
}

int VerifyReport::exit_code() const { return count(CheckStatus::Fail) > 0 ? 3 : 0; }

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["status"] = to_string(c.status);
    item["measured"] = c.measured;
    item["tolerance"] = c.tolerance;
    item["detail"] = c.detail;
    doc["checks"].push_back(std::move(item));
  }
  doc["summary"] = {{"pass", count(CheckStatus::Pass)},
                    {"fail", count(CheckStatus::Fail)},
                    {"warn", count(CheckStatus::Warn)},
                    {"exit_code", exit_code()}};
  return doc.dump(2) + "\n";
}

VerifyReport run_verify(const Lattice& lattice, const VerifyOptions& options) {
  const Assembly assembly = build_assembly(lattice);
  std::vector<FilletPatch> patches;
  for (const FilletPart& f : assembly.fillets) {
    patches.push_back(f.patch);
    if (options.inject_identity_fault) patches.back().Q.c += 1e-6 * (1.0 + std::abs(patches.back().Q.c));
  }

  VerifyReport report;
  stub_checks(assembly, options.tol, report.checks);
  if (!patches.empty()) fillet_checks(patches, report.checks);
  material_check(lattice, assembly, options, report.checks);
  fan_check(patches, report.checks);
  warning_check(assembly, report.checks);
  return report;
}

}  // namespace quadfillet::cli
