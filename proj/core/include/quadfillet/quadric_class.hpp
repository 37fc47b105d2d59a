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

#include <array>
#include <string_view>

#include "quadfillet/forms.hpp"

namespace quadfillet {

enum class QuadricKind {
  Ellipsoid,
  HyperboloidOneSheet,
  HyperboloidTwoSheets,
  EllipticParaboloid,
  HyperbolicParaboloid,
  EllipticCylinder,
  HyperbolicCylinder,
  ParabolicCylinder,
  Cone,
  ParallelPlanes,
  CrossingPlanes,
  SinglePlane,
  Line,
  Point,
  Empty,
};

std::string_view to_string(QuadricKind kind);

// Plane-pair classes: the zero set is one or two planes.
bool is_plane_pair(QuadricKind kind);

// Classes with a closed-form chart (see chart.hpp).
bool has_chart(QuadricKind kind);

// Canonical form of a quadric. With y = rotation^T (x - translation),
//   Q(x) = sum_i diagonal[i] * y_i^2 + 2 linear . y + constant,
// where `linear` has at most one non-zero entry, on an axis whose diagonal
// entry is zero.
struct QuadricClass {
  QuadricKind kind = QuadricKind::Empty;
  Mat3 rotation = Mat3::identity();
  Vec3 translation;
  std::array<double, 3> diagonal{};
  Vec3 linear;
  double constant = 0.0;

  Vec3 to_canonical(const Vec3& x) const { return rotation.transposed() * (x - translation); }
  Vec3 from_canonical(const Vec3& y) const { return translation + rotation * y; }
};

inline constexpr double kDefaultClassifyTolerance = 1e-9;

// Eigen-decomposes A (cyclic Jacobi) and completes squares. Eigenvalues with
// |lambda| <= tol * max|lambda| count as zero; the translation along null
// directions is the minimum-norm (least-squares) center, shifted along the
// linear axis for paraboloids so the constant vanishes.
// Throws Error(AllZero) when every coefficient is below 1e-14 in magnitude.
QuadricClass classify_quadric(const Quadric& q, double tol = kDefaultClassifyTolerance);

// Inverse of classify_quadric: the quadric described by a canonical form.
Quadric reconstruct(const QuadricClass& cls);

// True when the non-zero diagonal entries of the canonical form that set
// the cross-section are equal to within `tol` relative (sphere, circular
// cylinder, paraboloid of revolution, ...).
bool is_circular(const QuadricClass& cls, double tol = 1e-9);

}  // namespace quadfillet
