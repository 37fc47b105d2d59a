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

#include "quadfillet/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "quadfillet/error.hpp"
#include "quadfillet/fillet.hpp"

namespace quadfillet {
namespace {

// Shell radii (in hub radii) and directions per shell for the wedge-overlap probe.
constexpr double kWedgeShells[] = {1.05, 1.25, 1.5, 2.0};
constexpr int kWedgeDirections = 512;

bool plane_cuts_sphere(const LinearForm& g, const Vec3& center, double radius) {
  return std::abs(g(center)) / norm(g.g) < radius;
}

std::vector<Vec3> fibonacci_sphere(int n) {
  std::vector<Vec3> dirs;
  dirs.reserve(n);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double r = std::sqrt(1.0 - z * z);
    dirs.push_back({r * std::cos(golden * i), r * std::sin(golden * i), z});
  }
  return dirs;
}

}  // namespace

const Hub* Lattice::find_hub(std::string_view id) const {
  auto it = std::find_if(hubs.begin(), hubs.end(), [&](const Hub& h) { return h.id == id; });
  return it == hubs.end() ? nullptr : &*it;
}

const Beam* Lattice::find_beam(std::string_view id) const {
  auto it = std::find_if(beams.begin(), beams.end(), [&](const Beam& b) { return b.id == id; });
  return it == beams.end() ? nullptr : &*it;
}

Quadric sphere_quadric(const Hub& hub) {
  Quadric s;
  s.A = Mat3::identity();
  s.b = -hub.center;
  s.c = dot(hub.center, hub.center) - hub.radius * hub.radius;
  return s;
}

BeamGeometry beam_quador(const Hub& hub_a, const Hub& hub_b, double k) {
  if (k == 0.0) throw Error(ErrorCode::DegenerateK, "beam family parameter k is zero");
  if (hub_a.center == hub_b.center)
    throw Error(ErrorCode::InvalidArgument, "beam hubs have coincident centers");

  const Quadric sa = sphere_quadric(hub_a);
  const Quadric sb = sphere_quadric(hub_b);
  // S_a - S_b has identical quadratic parts, so it is affine.
  const LinearForm l{2.0 * (sa.b - sb.b), sa.c - sb.c};

  LinearForm ga = 0.5 * ((1.0 / k) * l + LinearForm{{}, k});
  LinearForm gb = ga - LinearForm{{}, k};
  if (ga(hub_b.center) < 0.0) ga = -ga;
  if (gb(hub_a.center) < 0.0) gb = -gb;

  if (!plane_cuts_sphere(ga, hub_a.center, hub_a.radius))
    throw Error(ErrorCode::PlaneMissesSphere, "tangency plane misses the sphere of hub " + hub_a.id, hub_a.id);
  if (!plane_cuts_sphere(gb, hub_b.center, hub_b.radius))
    throw Error(ErrorCode::PlaneMissesSphere, "tangency plane misses the sphere of hub " + hub_b.id, hub_b.id);

  BeamGeometry out;
  out.H = subtract_square(sa, ga);
  out.G_a = ga;
  out.G_b = gb;
  out.center_a = hub_a.center;
  out.center_b = hub_b.center;
  out.radius_a = hub_a.radius;
  out.radius_b = hub_b.radius;
  out.axis = normalized(hub_b.center - hub_a.center);
  return out;
}

std::optional<double> beam_radius(const BeamGeometry& beam, double s) {
  const double lambda = dot(beam.G_a.g, beam.axis);
  const double g0 = beam.G_a(beam.center_a);
  const double g = lambda * s + g0;
  const double rho2 = beam.radius_a * beam.radius_a + g * g - s * s;
  if (rho2 < 0.0) return std::nullopt;
  return std::sqrt(rho2);
}

StubView stub_view(const Lattice& lattice, std::string_view hub_id, std::string_view beam_id) {
  const Hub* hub = lattice.find_hub(hub_id);
  if (!hub) throw Error(ErrorCode::UnknownHub, std::string(hub_id));
  const Beam* beam = lattice.find_beam(beam_id);
  if (!beam) throw Error(ErrorCode::UnknownBeam, std::string(beam_id));
  const bool at_a = beam->hub_a == hub_id;
  if (!at_a && beam->hub_b != hub_id)
    throw Error(ErrorCode::InvalidArgument,
                "beam " + beam->id + " is not incident to hub " + std::string(hub_id));
  const Hub* a = lattice.find_hub(beam->hub_a);
  const Hub* b = lattice.find_hub(beam->hub_b);
  if (!a || !b) throw Error(ErrorCode::UnknownHub, "beam " + beam->id + " references a missing hub");

  const BeamGeometry geom = beam_quador(*a, *b, beam->k);
  StubView view;
  view.hub = hub->id;
  view.beam = beam->id;
  view.G = at_a ? geom.G_a : geom.G_b;
  view.H = subtract_square(sphere_quadric(*hub), view.G);
  view.axis = at_a ? geom.axis : -geom.axis;
  view.hub_center = hub->center;
  view.hub_radius = hub->radius;
  return view;
}

std::vector<StubView> stub_views_at_hub(const Lattice& lattice, std::string_view hub_id) {
  if (!lattice.find_hub(hub_id)) throw Error(ErrorCode::UnknownHub, std::string(hub_id));
  std::vector<StubView> views;
  for (const Beam& beam : lattice.beams)
    if (beam.hub_a == hub_id || beam.hub_b == hub_id)
      views.push_back(stub_view(lattice, hub_id, beam.id));
  return views;
}

bool ValidationReport::ok() const { return error_count() == 0; }

std::size_t ValidationReport::error_count() const {
  return std::count_if(issues.begin(), issues.end(),
                       [](const ValidationIssue& i) { return i.severity == Severity::Error; });
}

std::size_t ValidationReport::warning_count() const { return issues.size() - error_count(); }

bool ValidationReport::has(std::string_view code) const {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const ValidationIssue& i) { return i.code == code; });
}

ValidationReport validate_lattice(const Lattice& lattice) {
  ValidationReport report;
  auto error = [&](std::string code, std::string subject, std::string message) {
    report.issues.push_back({Severity::Error, std::move(code), std::move(subject), std::move(message)});
  };
  auto warning = [&](std::string code, std::string subject, std::string message) {
    report.issues.push_back(
        {Severity::Warning, std::move(code), std::move(subject), std::move(message)});
  };

  std::set<std::string> hub_ids;
  for (const Hub& h : lattice.hubs) {
    if (!hub_ids.insert(h.id).second) error("DUPLICATE_ID", h.id, "hub id is not unique");
    if (!(h.radius > 0.0) || !std::isfinite(h.radius))
      error("NON_POSITIVE_RADIUS", h.id, "hub radius must be positive and finite");
    if (!is_finite(h.center)) error("NON_FINITE", h.id, "hub center must be finite");
  }
  for (std::size_t i = 0; i < lattice.hubs.size(); ++i)
    for (std::size_t j = i + 1; j < lattice.hubs.size(); ++j) {
      const Hub& a = lattice.hubs[i];
      const Hub& b = lattice.hubs[j];
      if (norm(a.center - b.center) < a.radius + b.radius)
        warning("HUB_OVERLAP", a.id + "," + b.id, "hub spheres overlap");
    }

  std::set<std::string> beam_ids;
  std::set<std::string> good_beams;
  for (const Beam& b : lattice.beams) {
    if (!beam_ids.insert(b.id).second) error("DUPLICATE_ID", b.id, "beam id is not unique");
    const Hub* ha = lattice.find_hub(b.hub_a);
    const Hub* hb = lattice.find_hub(b.hub_b);
    if (!ha) error("UNKNOWN_HUB", b.id, "beam references missing hub " + b.hub_a);
    if (!hb) error("UNKNOWN_HUB", b.id, "beam references missing hub " + b.hub_b);
    if (b.hub_a == b.hub_b) {
      error("SAME_HUB", b.id, "beam endpoints must be distinct hubs");
      continue;
    }
    if (b.k == 0.0 || !std::isfinite(b.k)) {
      error("DEGENERATE_K", b.id, "beam family parameter k must be non-zero and finite");
      continue;
    }
    if (!ha || !hb || !(ha->radius > 0.0) || !(hb->radius > 0.0)) continue;
    try {
      beam_quador(*ha, *hb, b.k);
      good_beams.insert(b.id);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PlaneMissesSphere)
        error("PLANE_MISSES_SPHERE", b.id, "tangency plane misses the sphere of hub " + e.detail());
      else
        error(std::string(to_string(e.code())), b.id, e.detail());
    }
  }

  std::map<std::string, std::vector<FilletPatch>> patches_by_hub;
  for (const FilletSpec& f : lattice.fillets) {
    const std::string subject = f.hub + ":" + f.beam_i + "," + f.beam_j;
    if (!lattice.find_hub(f.hub)) {
      error("UNKNOWN_HUB", subject, "fillet references missing hub " + f.hub);
      continue;
    }
    if (!(f.beta > 0.0) || !std::isfinite(f.beta)) {
      error("NON_POSITIVE_BETA", subject, "fillet beta must be positive and finite");
      continue;
    }
    if (f.beam_i == f.beam_j) {
      error("SAME_BEAM", subject, "fillet beams must be distinct");
      continue;
    }
    bool refs_ok = true;
    for (const std::string& bid : {f.beam_i, f.beam_j}) {
      const Beam* b = lattice.find_beam(bid);
      if (!b) {
        error("UNKNOWN_BEAM", subject, "fillet references missing beam " + bid);
        refs_ok = false;
      } else if (b->hub_a != f.hub && b->hub_b != f.hub) {
        error("FILLET_PAIR_MISMATCH", subject, "beam " + bid + " is not incident to hub " + f.hub);
        refs_ok = false;
      } else if (!good_beams.count(bid)) {
        refs_ok = false;
      }
    }
    if (!refs_ok) continue;
    try {
      patches_by_hub[f.hub].push_back(build_fillet(stub_view(lattice, f.hub, f.beam_i),
                                                   stub_view(lattice, f.hub, f.beam_j), f.beta));
    } catch (const Error& e) {
      error(std::string(to_string(e.code())), subject, e.detail());
    }
  }

  // Wedge overlap: a sampled point lying inside two fillet solids at one hub.
  for (const auto& [hub_id, patches] : patches_by_hub) {
    if (patches.size() < 2) continue;
    std::size_t incident = 0;
    for (const Beam& b : lattice.beams) incident += (b.hub_a == hub_id || b.hub_b == hub_id) ? 1 : 0;
    if (incident <= 2) continue;
    const Hub* hub = lattice.find_hub(hub_id);
    const auto dirs = fibonacci_sphere(kWedgeDirections);
    bool overlap = false;
    for (double shell : kWedgeShells) {
      for (const Vec3& d : dirs) {
        const Vec3 p = hub->center + (shell * hub->radius) * d;
        int inside = 0;
        for (const FilletPatch& patch : patches)
          if (patch.E1(p) > 0.0 && patch.E2(p) > 0.0 && patch.Q(p) < 0.0) ++inside;
        if (inside >= 2) {
          overlap = true;
          break;
        }
      }
      if (overlap) break;
    }
    if (overlap)
      warning("FILLET_WEDGE_OVERLAP", hub_id, "fillet wedges overlap; tangency between them is not guaranteed");
  }

  return report;
}

}  // namespace quadfillet
