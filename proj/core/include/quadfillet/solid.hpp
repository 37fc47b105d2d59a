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

#include <string>
#include <vector>

#include "quadfillet/fillet.hpp"
#include "quadfillet/lattice.hpp"

namespace quadfillet {

struct HubPart {
  std::string id;
  Quadric S;
  Vec3 center;
  double radius = 0.0;
  double locality = 0.0;  // fillets at this hub are clipped to this ball
};

struct BeamPart {
  std::string id;
  BeamGeometry geometry;
};

struct FilletPart {
  FilletPatch patch;
  Vec3 center;
  double locality = 0.0;
};

// Implicit solid for a lattice: the union (min) of
//   hubs    S
//   beams   max(H, -G_a, -G_b)
//   fillets max(Q, -E1, -E2, |x - c|^2 - rho^2)
// Parts are stored sorted by id so the region tie-break is deterministic.
struct Assembly {
  std::vector<HubPart> hubs;
  std::vector<BeamPart> beams;
  std::vector<FilletPart> fillets;
  ValidationReport validation;  // warnings carried from construction
};

struct AssemblyOptions {
  // rho_h = multiplier * (distance to the nearest neighbouring hub).
  double locality_multiplier = 1.0;
};

// Throws Error(ValidationError) if the lattice has validation errors, and
// Error(InvalidArgument) if a hub's locality radius does not exceed its radius.
Assembly build_assembly(const Lattice& lattice, const AssemblyOptions& options = {});

// Sampled check that each fillet solid has closed up before its locality
// boundary; emits FILLET_CLIPPED_BY_LOCALITY warnings otherwise.
std::vector<ValidationIssue> assembly_warnings(const Assembly& assembly);

struct RegionLabel {
  enum class Kind { Hub, Beam, Fillet, Outside };
  Kind kind = Kind::Outside;
  std::string hub;
  std::string beam;
  std::string beam2;

  // HUB(h), BEAM(b), FILLET(h;bi;bj) or OUTSIDE. No commas, so the label
  // is a single CSV field.
  std::string to_string() const;
  friend bool operator==(const RegionLabel&, const RegionLabel&) = default;
};

struct FieldSample {
  double value = 0.0;
  Vec3 gradient;      // gradient of the active piece
  RegionLabel label;  // the part attaining the minimum
};

double field_value(const Assembly& assembly, const Vec3& x);
FieldSample evaluate_field(const Assembly& assembly, const Vec3& x);

enum class PointState { Inside, Outside, Boundary };
std::string_view to_string(PointState state);

struct PointClass {
  PointState state = PointState::Outside;
  RegionLabel label;
  double value = 0.0;
};

// |f| <= tol is Boundary; otherwise the sign of f decides. Outside points
// get the OUTSIDE label; others get the minimizing part (hubs before beams
// before fillets, then by id).
PointClass classify_point(const Assembly& assembly, const Vec3& x, double tol);

struct Box {
  Vec3 lo;
  Vec3 hi;

  Vec3 size() const { return hi - lo; }
  bool contains(const Vec3& p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z && p.z <= hi.z;
  }
};

// Covers hub spheres, each beam's swept circle (max radius over 33 stations
// between its tangency planes) and each fillet's reach, padded by
// margin * (largest hub or beam radius). An empty assembly gives [-1, 1]^3.
Box auto_bounds(const Assembly& assembly, double margin = 0.1);

}  // namespace quadfillet
