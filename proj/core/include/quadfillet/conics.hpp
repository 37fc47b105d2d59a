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

#include <string_view>
#include <vector>

#include "quadfillet/chart.hpp"
#include "quadfillet/forms.hpp"

namespace quadfillet {

// Orthonormal frame on the plane {E = 0}. `origin` is the foot of the
// perpendicular from the global origin.
struct PlaneFrame {
  Vec3 origin;
  Vec3 u;
  Vec3 v;
  Vec3 normal;

  Vec3 point(double s, double t) const { return origin + s * u + t * v; }
};

enum class ConicKind {
  Ellipse,
  Circle,
  Parabola,
  Hyperbola,
  ParallelLines,
  CrossingLines,
  SingleLine,
  Point,
  Empty,
};

std::string_view to_string(ConicKind kind);

bool is_compact(ConicKind kind);  // ellipse, circle, point

// a s^2 + 2b st + c t^2 + 2d s + 2e t + f in plane-frame coordinates.
struct ConicCoefficients {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0, f = 0.0;

  double operator()(double s, double t) const {
    return a * s * s + 2.0 * b * s * t + c * t * t + 2.0 * d * s + 2.0 * e * t + f;
  }
};

// Principal-axes form in the plane: with (s, t) = center + p*axis1 + q*axis2,
//   l1 p^2 + l2 q^2 + 2 m q + k = 0.
// The linear term only survives for parabolas (l2 == 0) and single lines
// given by an affine equation (l1 == l2 == 0).
struct ConicCanonical {
  double center_s = 0.0, center_t = 0.0;
  double axis1_s = 1.0, axis1_t = 0.0;
  double axis2_s = 0.0, axis2_t = 1.0;
  double l1 = 0.0, l2 = 0.0, m = 0.0, k = 0.0;
};

struct Conic {
  PlaneFrame frame;
  ConicCoefficients coefficients;
  ConicKind kind = ConicKind::Empty;
  ConicCanonical canonical;
};

inline constexpr double kDefaultConicTolerance = 1e-10;
inline constexpr double kDefaultUnboundedRange = 4.0;

// Deterministic frame: n = grad E / |grad E|, u = normalize(n x e) with e the
// global axis least aligned with n (ties resolve x, then y, then z), v = n x u.
// Throws Error(ZeroGradient) when |grad E| == 0.
PlaneFrame plane_frame(const LinearForm& e);

struct ConicClassification {
  ConicKind kind;
  ConicCanonical canonical;
};

// Rank/discriminant classification. Second-order entries with magnitude at
// most tol * max(|a|,|b|,|c|,|d|,|e|,|f|) count as zero.
// Throws Error(AllZero) when all six coefficients vanish.
ConicClassification classify_conic(const ConicCoefficients& k,
                                   double tol = kDefaultConicTolerance);

// Substitutes x = origin + s u + t v into Q and classifies the result.
Conic intersect_quadric_plane(const Quadric& q, const LinearForm& e,
                              double tol = kDefaultConicTolerance);

struct ConicBranch {
  std::vector<Vec3> points;
  bool closed = false;
  double param_min = 0.0;
  double param_max = 0.0;
};

// Samples per connected branch. Closed curves use n uniform angles; open
// curves split n across branches with the parameter in [-range, range].
// Throws Error(NotACurve) for POINT/EMPTY conics or n < 2.
std::vector<ConicBranch> sample_conic_branches(const Conic& conic, int n,
                                               double range = kDefaultUnboundedRange);

// All branch samples concatenated.
std::vector<Vec3> sample_conic(const Conic& conic, int n, double range = kDefaultUnboundedRange);

// Trimming curve of the conic in the chart's parameter space. Angular
// parameters are unwrapped along each branch. Throws Error(PointOffSurface)
// if a sample is not on the chart's surface to 1e-9 relative.
std::vector<ChartPoint> pcurve(const Conic& conic, const SurfaceChart& chart, int n,
                               double range = kDefaultUnboundedRange);

}  // namespace quadfillet
