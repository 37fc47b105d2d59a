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
#include <optional>
#include <string>

#include "quadfillet/forms.hpp"
#include "quadfillet/quadric_class.hpp"

namespace quadfillet {

struct ChartPoint {
  double u = 0.0;
  double v = 0.0;
};

// Closed-form parametrization of a non-degenerate quadric in its canonical
// frame. With canonical coordinates (y_i, y_j, y_k):
//
//   ellipsoid             (a_i cos u cos v, a_j sin u cos v, a_k sin v)
//   hyperboloid, 1 sheet  (a_i cosh v cos u, a_j cosh v sin u, a_k sinh v)
//   hyperboloid, 2 sheets (a_i tan v cos u, a_j tan v sin u, a_k / cos v);
//                         cos v > 0 on one sheet, < 0 on the other
//   elliptic paraboloid   radial v >= 0 and angle u
//   hyperbolic paraboloid graph over (y_i, y_j)
//   elliptic cylinder     (a_i cos u, a_j sin u, v)
//   hyperbolic cylinder   (a_p / cos u, a_q tan u, v); both branches
//   parabolic cylinder    (u, -l u^2 / 2e, v)
//   cone                  (b_i v cos u, b_j v sin u, b_k v); both nappes
class SurfaceChart {
 public:
  SurfaceChart(const Quadric& surface, const QuadricClass& cls);

  QuadricKind kind() const { return cls_.kind; }
  const Quadric& surface() const { return surface_; }
  const QuadricClass& classification() const { return cls_; }

  Vec3 forward(double u, double v) const;
  Vec3 forward(const ChartPoint& p) const { return forward(p.u, p.v); }

  // Parameters of an on-surface point. Off-surface points map to a nearby
  // parameter pair; callers check residuals first when that matters.
  ChartPoint inverse(const Vec3& p) const;

  // Period of each parameter when it is an angle.
  std::optional<double> u_period() const;
  std::optional<double> v_period() const;

  std::string domain() const;

 private:
  Quadric surface_;
  QuadricClass cls_;
  std::array<int, 3> axis_{0, 1, 2};      // canonical axis playing role i, j, k
  std::array<double, 3> scale_{1, 1, 1};  // per-role semi-axis or scale
  double lambda_ = 0.0;                   // squared-term coefficient (paraboloids)
  double lambda2_ = 0.0;
  double linear_ = 0.0;                   // linear coefficient (paraboloids)
  int sign_ = 1;
};

// Throws Error(UnsupportedClass) for plane pairs, lines, points and empty sets.
SurfaceChart parametrize(const Quadric& q, const QuadricClass& cls);

}  // namespace quadfillet
