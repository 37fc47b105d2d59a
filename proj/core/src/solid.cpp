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

#include "quadfillet/solid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "quadfillet/error.hpp"

namespace quadfillet {
namespace {

constexpr int kBeamStations = 33;
constexpr int kLocalityProbe = 2048;

struct Piece {
  double value;
  Vec3 gradient;
};

Piece max_piece(const Piece& a, const Piece& b) { return b.value > a.value ? b : a; }

Piece linear_piece(const LinearForm& l, const Vec3& x, double sign) {
  return {sign * l(x), sign * l.g};
}

Piece quadric_piece(const Quadric& q, const Vec3& x) { return {q(x), gradient(q, x)}; }

Piece beam_piece(const BeamPart& b, const Vec3& x) {
  Piece p = quadric_piece(b.geometry.H, x);
  p = max_piece(p, linear_piece(b.geometry.G_a, x, -1.0));
  return max_piece(p, linear_piece(b.geometry.G_b, x, -1.0));
}

Piece fillet_piece(const FilletPart& f, const Vec3& x) {
  Piece p = quadric_piece(f.patch.Q, x);
  p = max_piece(p, linear_piece(f.patch.E1, x, -1.0));
  p = max_piece(p, linear_piece(f.patch.E2, x, -1.0));
  const Vec3 d = x - f.center;
  return max_piece(p, {dot(d, d) - f.locality * f.locality, 2.0 * d});
}

double beam_value(const BeamPart& b, const Vec3& x) {
  return std::max({b.geometry.H(x), -b.geometry.G_a(x), -b.geometry.G_b(x)});
}

double fillet_value(const FilletPart& f, const Vec3& x) {
  const Vec3 d = x - f.center;
  return std::max({f.patch.Q(x), -f.patch.E1(x), -f.patch.E2(x),
                   dot(d, d) - f.locality * f.locality});
}

void include_point(Box& box, const Vec3& p) {
  for (int i = 0; i < 3; ++i) {
    box.lo[i] = std::min(box.lo[i], p[i]);
    box.hi[i] = std::max(box.hi[i], p[i]);
  }
}

void include_ball(Box& box, const Vec3& c, double r) {
  include_point(box, c - Vec3{r, r, r});
  include_point(box, c + Vec3{r, r, r});
}

// Axis-aligned extent of a disc with unit normal n.
void include_disc(Box& box, const Vec3& c, const Vec3& n, double r) {
  Vec3 half;
  for (int i = 0; i < 3; ++i) half[i] = r * std::sqrt(std::max(0.0, 1.0 - n[i] * n[i]));
  include_point(box, c - half);
  include_point(box, c + half);
}

}  // namespace

std::string RegionLabel::to_string() const {
  switch (kind) {
    case Kind::Hub: return "HUB(" + hub + ")";
    case Kind::Beam: return "BEAM(" + beam + ")";
    case Kind::Fillet: return "FILLET(" + hub + ";" + beam + ";" + beam2 + ")";
    case Kind::Outside: return "OUTSIDE";
  }
  return "OUTSIDE";
}

std::string_view to_string(PointState state) {
  switch (state) {
    case PointState::Inside: return "inside";
    case PointState::Outside: return "outside";
    case PointState::Boundary: return "boundary";
  }
  return "outside";
}

Assembly build_assembly(const Lattice& lattice, const AssemblyOptions& options) {
  Assembly out;
  out.validation = validate_lattice(lattice);
  if (!out.validation.ok()) {
    const auto& first = *std::find_if(out.validation.issues.begin(), out.validation.issues.end(),
                                      [](const ValidationIssue& i) { return i.severity == Severity::Error; });
    throw Error(ErrorCode::ValidationError, first.code + " (" + first.subject + "): " + first.message);
  }

  for (const Hub& h : lattice.hubs) {
    HubPart part{h.id, sphere_quadric(h), h.center, h.radius, 0.0};
    double nearest = std::numeric_limits<double>::infinity();
    for (const Beam& b : lattice.beams) {
      if (b.hub_a != h.id && b.hub_b != h.id) continue;
      const Hub* far = lattice.find_hub(b.hub_a == h.id ? b.hub_b : b.hub_a);
      nearest = std::min(nearest, norm(far->center - h.center));
    }
    part.locality = std::isfinite(nearest) ? options.locality_multiplier * nearest : 2.0 * h.radius;
    if (!(part.locality > h.radius))
      throw Error(ErrorCode::InvalidArgument,
                  "locality radius of hub " + h.id + " does not exceed its radius");
    out.hubs.push_back(std::move(part));
  }
  for (const Beam& b : lattice.beams)
    out.beams.push_back(
        {b.id, beam_quador(*lattice.find_hub(b.hub_a), *lattice.find_hub(b.hub_b), b.k)});
  for (const FilletSpec& f : lattice.fillets) {
    const Hub* hub = lattice.find_hub(f.hub);
    const double locality =
        std::find_if(out.hubs.begin(), out.hubs.end(), [&](const HubPart& h) { return h.id == f.hub; })
            ->locality;
    out.fillets.push_back({build_fillet(stub_view(lattice, f.hub, f.beam_i),
                                        stub_view(lattice, f.hub, f.beam_j), f.beta),
                           hub->center, locality});
  }

  std::sort(out.hubs.begin(), out.hubs.end(),
            [](const HubPart& a, const HubPart& b) { return a.id < b.id; });
  std::sort(out.beams.begin(), out.beams.end(),
            [](const BeamPart& a, const BeamPart& b) { return a.id < b.id; });
  std::sort(out.fillets.begin(), out.fillets.end(), [](const FilletPart& a, const FilletPart& b) {
    return std::tie(a.patch.hub, a.patch.beam_i, a.patch.beam_j) <
           std::tie(b.patch.hub, b.patch.beam_i, b.patch.beam_j);
  });
  return out;
}

std::vector<ValidationIssue> assembly_warnings(const Assembly& assembly) {
  std::vector<ValidationIssue> out;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (const FilletPart& f : assembly.fillets) {
    bool active = false;
    for (int i = 0; i < kLocalityProbe && !active; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / kLocalityProbe;
      const double r = std::sqrt(1.0 - z * z);
      const Vec3 p = f.center + f.locality * Vec3{r * std::cos(golden * i), r * std::sin(golden * i), z};
      active = f.patch.Q(p) <= 0.0 && f.patch.E1(p) >= 0.0 && f.patch.E2(p) >= 0.0;
    }
    if (active)
      out.push_back({Severity::Warning, "FILLET_CLIPPED_BY_LOCALITY",
                     f.patch.hub + ":" + f.patch.beam_i + "," + f.patch.beam_j,
                     "fillet solid reaches the hub locality boundary and is clipped there"});
  }
  return out;
}

double field_value(const Assembly& assembly, const Vec3& x) {
  double f = std::numeric_limits<double>::infinity();
  for (const HubPart& h : assembly.hubs) f = std::min(f, h.S(x));
  for (const BeamPart& b : assembly.beams) f = std::min(f, beam_value(b, x));
  for (const FilletPart& p : assembly.fillets) f = std::min(f, fillet_value(p, x));
  return f;
}

FieldSample evaluate_field(const Assembly& assembly, const Vec3& x) {
  FieldSample out;
  out.value = std::numeric_limits<double>::infinity();
  auto consider = [&](const Piece& p, RegionLabel label) {
    if (p.value < out.value) {
      out.value = p.value;
      out.gradient = p.gradient;
      out.label = std::move(label);
    }
  };
  for (const HubPart& h : assembly.hubs)
    consider(quadric_piece(h.S, x), {RegionLabel::Kind::Hub, h.id, {}, {}});
  for (const BeamPart& b : assembly.beams)
    consider(beam_piece(b, x), {RegionLabel::Kind::Beam, {}, b.id, {}});
  for (const FilletPart& f : assembly.fillets)
    consider(fillet_piece(f, x),
             {RegionLabel::Kind::Fillet, f.patch.hub, f.patch.beam_i, f.patch.beam_j});
  return out;
}

PointClass classify_point(const Assembly& assembly, const Vec3& x, double tol) {
  const FieldSample s = evaluate_field(assembly, x);
  PointClass out;
  out.value = s.value;
  if (std::abs(s.value) <= tol) out.state = PointState::Boundary;
  else out.state = s.value < 0.0 ? PointState::Inside : PointState::Outside;
  if (out.state != PointState::Outside) out.label = s.label;
  return out;
}

Box auto_bounds(const Assembly& assembly, double margin) {
  if (assembly.hubs.empty()) return {{-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}};
  const double inf = std::numeric_limits<double>::infinity();
  Box box{{inf, inf, inf}, {-inf, -inf, -inf}};
  double feature = 0.0;

  for (const HubPart& h : assembly.hubs) {
    include_ball(box, h.center, h.radius);
    feature = std::max(feature, h.radius);
  }
  for (const BeamPart& b : assembly.beams) {
    const BeamGeometry& g = b.geometry;
    const Vec3& a = g.axis;
    const double la = dot(g.G_a.g, a);
    const double lb = dot(g.G_b.g, a);
    const double s_lo = la != 0.0 ? -g.G_a(g.center_a) / la : 0.0;
    const double s_hi = lb != 0.0 ? -g.G_b(g.center_a) / lb : g.length();
    double rho = 0.0;
    for (int i = 0; i < kBeamStations; ++i) {
      const double s = s_lo + (s_hi - s_lo) * i / (kBeamStations - 1);
      if (const auto r = beam_radius(g, s)) rho = std::max(rho, *r);
    }
    include_disc(box, g.center_a + s_lo * a, a, rho);
    include_disc(box, g.center_a + s_hi * a, a, rho);
    feature = std::max(feature, rho);
  }
  for (const FilletPart& f : assembly.fillets) {
    const double reach = f.patch.extent ? std::min(*f.patch.extent, f.locality) : f.locality;
    include_ball(box, f.center, reach);
  }

  const double pad = margin * feature;
  box.lo -= Vec3{pad, pad, pad};
  box.hi += Vec3{pad, pad, pad};
  return box;
}

}  // namespace quadfillet
