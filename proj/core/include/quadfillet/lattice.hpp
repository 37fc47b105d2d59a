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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadfillet/forms.hpp"

namespace quadfillet {

struct Hub {
  std::string id;
  Vec3 center;
  double radius = 1.0;
};

// A beam joins two hubs with a quador tangent to both hub spheres. `k`
// selects the member of that one-parameter family (k = hub distance gives a
// paraboloid or cylinder).
struct Beam {
  std::string id;
  std::string hub_a;
  std::string hub_b;
  double k = 0.0;
};

struct FilletSpec {
  std::string hub;
  std::string beam_i;
  std::string beam_j;
  double beta = 1.0;
};

struct Lattice {
  std::vector<Hub> hubs;
  std::vector<Beam> beams;
  std::vector<FilletSpec> fillets;

  const Hub* find_hub(std::string_view id) const;
  const Beam* find_beam(std::string_view id) const;
};

// The beam quador and its two tangency planes, G_a on hub a's side and G_b on
// hub b's side. Both planes are sign-normalized to be positive toward the far
// hub, so the beam slab is {G_a >= 0, G_b >= 0}.
struct BeamGeometry {
  Quadric H;
  LinearForm G_a;
  LinearForm G_b;
  Vec3 center_a;
  Vec3 center_b;
  double radius_a = 0.0;
  double radius_b = 0.0;
  Vec3 axis;  // unit, from hub a toward hub b

  double length() const { return norm(center_b - center_a); }
};

// The view of one beam from one of its hubs.
struct StubView {
  std::string hub;
  std::string beam;
  LinearForm G;  // positive toward the far hub
  Quadric H;     // sphere_quadric(hub) - G^2
  Vec3 axis;     // unit, toward the far hub
  Vec3 hub_center;
  double hub_radius = 0.0;
};

// (x - c).(x - c) - r^2: negative inside, increasing outward.
Quadric sphere_quadric(const Hub& hub);

// Two-sphere tangent quador: with L = S_a - S_b (affine),
// G_a = (L/k + k)/2 and G_b = G_a - k give S_a - G_a^2 = S_b - G_b^2.
// Throws Error(DegenerateK) for k == 0 and Error(PlaneMissesSphere) when a
// tangency plane does not cut its sphere.
BeamGeometry beam_quador(const Hub& hub_a, const Hub& hub_b, double k);

// Radius of the beam's circular cross-section at axial distance s from
// hub a's center, or nullopt where the quador has no real section.
std::optional<double> beam_radius(const BeamGeometry& beam, double s);

// Throws Error(UnknownHub) if the hub does not exist. Beams whose
// construction fails are propagated as errors.
std::vector<StubView> stub_views_at_hub(const Lattice& lattice, std::string_view hub_id);

// The view of one named beam from one named hub.
StubView stub_view(const Lattice& lattice, std::string_view hub_id, std::string_view beam_id);

enum class Severity { Error, Warning };

struct ValidationIssue {
  Severity severity = Severity::Error;
  std::string code;     // e.g. DEGENERATE_K, FILLET_PAIR_MISMATCH
  std::string subject;  // id of the offending item
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const;  // no errors; warnings allowed
  std::size_t error_count() const;
  std::size_t warning_count() const;
  bool has(std::string_view code) const;
};

// Checks ids and references, radii, beam construction, fillet pairs (which
// are trial-built), overlapping hub spheres (warning) and overlapping fillet
// wedges at hubs with more than two beams (warning, sampled).
ValidationReport validate_lattice(const Lattice& lattice);

}  // namespace quadfillet
