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

#include "quadfillet/curvature.hpp"

#include <cmath>
#include <utility>

#include "quadfillet/error.hpp"

namespace quadfillet {
namespace {

constexpr double kSingularTolerance = 1e-12;

}  // namespace

PrincipalCurvatures principal_curvatures(const Quadric& q, const Vec3& x) {
  const Vec3 grad = gradient(q, x);
  const double gn = norm(grad);
  const double scale = 2.0 * (frobenius_norm(q.A) * norm(x) + norm(q.b));
  if (!(gn > kSingularTolerance * scale) || gn == 0.0)
    throw Error(ErrorCode::SingularPoint, "gradient vanishes at the query point");

  const Vec3 n = grad / gn;
  int least = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(n[i]) < std::abs(n[least])) least = i;
  Vec3 e;
  e[least] = 1.0;
  const Vec3 t1 = normalized(cross(n, e));
  const Vec3 t2 = cross(n, t1);

  // Shape operator restricted to the tangent plane: t^T (2A) t / |grad Q|.
  const double a = 2.0 * dot(t1, q.A * t1) / gn;
  const double b = 2.0 * dot(t1, q.A * t2) / gn;
  const double c = 2.0 * dot(t2, q.A * t2) / gn;
  const double mean = 0.5 * (a + c);
  const double radius = std::hypot(0.5 * (a - c), b);

  PrincipalCurvatures out{mean + radius, mean - radius};
  if (std::abs(out.k2) > std::abs(out.k1)) std::swap(out.k1, out.k2);
  return out;
}

}  // namespace quadfillet
