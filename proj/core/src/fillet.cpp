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

#include "quadfillet/fillet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "quadfillet/curvature.hpp"
#include "quadfillet/error.hpp"

namespace quadfillet {
namespace {

constexpr double kIdentityTolerance = 1e-12;
constexpr int kExtentSeeds = 1024;
constexpr int kGoldenIterations = 200;

Vec3 point_on_ellipse(const Conic& conic, double theta) {
  const ConicCanonical& cn = conic.canonical;
  const double ra = std::sqrt(-cn.k / cn.l1);
  const double rb = std::sqrt(-cn.k / cn.l2);
  const double p = ra * std::cos(theta);
  const double q = rb * std::sin(theta);
  return conic.frame.point(cn.center_s + p * cn.axis1_s + q * cn.axis2_s,
                           cn.center_t + p * cn.axis1_t + q * cn.axis2_t);
}

}  // namespace

FilletPlanes fillet_planes_unconstrained(const LinearForm& G1, const LinearForm& G2,
                                         double alpha, double beta) {
  FilletPlanes p;
  p.alpha = alpha;
  p.beta = beta;
  p.F_minus = G2 - G1;
  p.F_plus = G2 + G1;
  p.E1 = alpha * p.F_plus + beta * p.F_minus;
  p.E2 = alpha * p.F_plus - beta * p.F_minus;
  return p;
}

FilletPlanes fillet_planes(const LinearForm& G1, const LinearForm& G2, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw Error(ErrorCode::InvalidArgument, "beta must be positive and finite");
  const double cross_norm = norm(cross(G1.g, G2.g));
  if (!(cross_norm > kParallelStubTolerance * norm(G1.g) * norm(G2.g)))
    throw Error(ErrorCode::ParallelStubs, "stub tangency planes are parallel");
  return fillet_planes_unconstrained(G1, G2, 1.0 / (4.0 * beta), beta);
}

Quadric fillet_residual(const Quadric& H1, const Quadric& H2, const LinearForm& E1,
                        const LinearForm& E2) {
  return subtract_square(H1, E1) - subtract_square(H2, E2);
}

double identity_deviation(const FilletPatch& patch) {
  const Quadric other = subtract_square(patch.stub2.H, patch.E2);
  return coefficient_norm(patch.Q - other) / coefficient_norm(patch.Q);
}

std::pair<Conic, Conic> tangency_conics(const FilletPatch& patch) {
  Conic c1 = intersect_quadric_plane(patch.stub1.H, patch.E1);
  Conic c2 = intersect_quadric_plane(patch.stub2.H, patch.E2);
  if (c1.kind == ConicKind::Empty)
    throw Error(ErrorCode::EmptyConic, "plane E1 misses the quador of beam " + patch.beam_i);
  if (c2.kind == ConicKind::Empty)
    throw Error(ErrorCode::EmptyConic, "plane E2 misses the quador of beam " + patch.beam_j);
  return {std::move(c1), std::move(c2)};
}

double farthest_distance(const Conic& conic, const Vec3& center) {
  if (conic.kind == ConicKind::Point) {
    const ConicCanonical& cn = conic.canonical;
    return norm(conic.frame.point(cn.center_s, cn.center_t) - center);
  }
  if (conic.kind != ConicKind::Ellipse && conic.kind != ConicKind::Circle)
    throw Error(ErrorCode::InvalidArgument, "farthest distance needs a compact conic");

  auto dist2 = [&](double th) {
    const Vec3 d = point_on_ellipse(conic, th) - center;
    return dot(d, d);
  };
  const double step = 2.0 * std::numbers::pi / kExtentSeeds;
  int best = 0;
  double best_val = dist2(0.0);
  for (int i = 1; i < kExtentSeeds; ++i) {
    const double v = dist2(i * step);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  // Golden-section refinement around the best seed.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = (best - 1) * step;
  double hi = (best + 1) * step;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = dist2(x1);
  double f2 = dist2(x2);
  for (int it = 0; it < kGoldenIterations && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = dist2(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = dist2(x1);
    }
  }
  return std::sqrt(std::max({best_val, f1, f2}));
}

std::optional<double> fillet_extent(const FilletPatch& patch) {
  if (!is_compact(patch.conic1.kind) || !is_compact(patch.conic2.kind)) return std::nullopt;
  const Vec3& c = patch.stub1.hub_center;
  return std::max(farthest_distance(patch.conic1, c), farthest_distance(patch.conic2, c));
}

FilletPatch build_fillet(const StubView& stub1, const StubView& stub2, double beta) {
  if (stub1.hub != stub2.hub)
    throw Error(ErrorCode::InvalidArgument, "stubs " + stub1.beam + " and " + stub2.beam +
                                                " do not share a hub");
  const FilletPlanes planes = fillet_planes(stub1.G, stub2.G, beta);

  FilletPatch patch;
  patch.hub = stub1.hub;
  patch.beam_i = stub1.beam;
  patch.beam_j = stub2.beam;
  patch.stub1 = stub1;
  patch.stub2 = stub2;
  patch.alpha = planes.alpha;
  patch.beta = planes.beta;
  patch.F_plus = planes.F_plus;
  patch.F_minus = planes.F_minus;
  patch.E1 = planes.E1;
  patch.E2 = planes.E2;

  const Vec3 bisector = stub1.axis + stub2.axis;
  if (norm(bisector) == 0.0)
    throw Error(ErrorCode::ParallelStubs, "stub axes are opposite; no outward bisector");
  const Vec3 probe = stub1.hub_center + stub1.hub_radius * normalized(bisector);
  const double e1 = patch.E1(probe);
  const double e2 = patch.E2(probe);
  if (e1 < 0.0 && e2 < 0.0) {
    patch.E1 = -patch.E1;
    patch.E2 = -patch.E2;
    patch.flipped = true;
  } else if (!(e1 > 0.0 && e2 > 0.0)) {
    throw Error(ErrorCode::WedgeOrientation,
                "planes E1, E2 disagree in sign at the bisector probe");
  }

  patch.Q = subtract_square(stub1.H, patch.E1);
  if (!(identity_deviation(patch) <= kIdentityTolerance))
    throw Error(ErrorCode::IdentityViolation, "H1 - E1^2 and H2 - E2^2 differ");
  patch.kind = classify_quadric(patch.Q).kind;

  auto [c1, c2] = tangency_conics(patch);
  patch.conic1 = std::move(c1);
  patch.conic2 = std::move(c2);
  patch.extent = fillet_extent(patch);
  return patch;
}

std::optional<double> first_ray_hit(const Quadric& q, const Vec3& origin, const Vec3& dir) {
  const double a = dot(dir, q.A * dir);
  const double b = 2.0 * dot(q.A * origin + q.b, dir);
  const double c = q(origin);
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (scale == 0.0) return std::nullopt;

  double r1 = std::numeric_limits<double>::quiet_NaN();
  double r2 = r1;
  if (std::abs(a) <= 1e-15 * scale) {
    if (b != 0.0) r1 = -c / b;
  } else {
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return std::nullopt;
    const double t = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    r1 = t / a;
    if (t != 0.0) r2 = c / t;
  }
  std::optional<double> best;
  for (double r : {r1, r2})
    if (std::isfinite(r) && r > 0.0 && (!best || r < *best)) best = r;
  return best;
}

double fillet_min_curvature_radius(const FilletPatch& patch) {
  if (patch.degenerate()) return std::numeric_limits<double>::infinity();
  const Vec3 w = normalized(patch.stub1.axis + patch.stub2.axis);
  const Vec3& c = patch.stub1.hub_center;
  const auto s = first_ray_hit(patch.Q, c, w);
  if (!s) throw Error(ErrorCode::NoBisectorIntersection, "outward bisector misses the fillet");
  const PrincipalCurvatures k = principal_curvatures(patch.Q, c + *s * w);
  const double kmax = std::max(std::abs(k.k1), std::abs(k.k2));
  return kmax == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / kmax;
}

}  // namespace quadfillet
