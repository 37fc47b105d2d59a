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
#include <utility>

#include "quadfillet/conics.hpp"
#include "quadfillet/forms.hpp"
#include "quadfillet/lattice.hpp"
#include "quadfillet/quadric_class.hpp"

namespace quadfillet {

// Planes of the fillet construction for two stubs G1, G2 at one hub:
//   F- = G2 - G1,  F+ = G2 + G1,  E1 = alpha F+ + beta F-,  E2 = alpha F+ - beta F-.
// H1 - E1^2 and H2 - E2^2 coincide exactly when alpha * beta = 1/4.
struct FilletPlanes {
  LinearForm F_plus;
  LinearForm F_minus;
  LinearForm E1;
  LinearForm E2;
  double alpha = 0.0;
  double beta = 0.0;
};

// Relative tolerance on |grad G1 x grad G2| below which stubs count as parallel.
inline constexpr double kParallelStubTolerance = 1e-9;

// alpha = 1/(4 beta). Throws Error(ParallelStubs) for (nearly) parallel
// tangency planes and Error(InvalidArgument) for beta <= 0.
FilletPlanes fillet_planes(const LinearForm& G1, const LinearForm& G2, double beta);

// The same planes for an arbitrary (alpha, beta) pair; no constraint applied.
FilletPlanes fillet_planes_unconstrained(const LinearForm& G1, const LinearForm& G2,
                                         double alpha, double beta);

struct FilletPatch {
  std::string hub;
  std::string beam_i;
  std::string beam_j;
  StubView stub1;
  StubView stub2;
  double alpha = 0.0;
  double beta = 0.0;
  LinearForm F_plus;
  LinearForm F_minus;
  LinearForm E1;  // the fillet wedge is {E1 >= 0, E2 >= 0}
  LinearForm E2;
  bool flipped = false;  // E1, E2 were negated together to orient the wedge
  Quadric Q;             // H1 - E1^2
  QuadricKind kind = QuadricKind::Empty;
  Conic conic1;  // {H1 = 0} on {E1 = 0}
  Conic conic2;  // {H2 = 0} on {E2 = 0}
  std::optional<double> extent;  // nullopt: unbounded

  // Plane-pair fillets are the chamfer-like members of the family.
  bool degenerate() const { return is_plane_pair(kind); }
};

// |coeffs(Q - (H2 - E2^2))| / |coeffs(Q)| for a built patch.
double identity_deviation(const FilletPatch& patch);

// Builds the single fillet quadric for two stubs sharing a hub. The wedge
// is oriented so E1 and E2 are positive at c + r (u1 + u2)/|u1 + u2|.
// Throws Error(ParallelStubs), Error(WedgeOrientation) when the probe
// splits the planes' signs, Error(IdentityViolation) when the two routes to
// Q disagree beyond 1e-12 relative, and Error(EmptyConic).
FilletPatch build_fillet(const StubView& stub1, const StubView& stub2, double beta);

// (H1 - E1^2) - (H2 - E2^2). Equals (1 - 4 alpha beta) F+ F- for the planes above.
Quadric fillet_residual(const Quadric& H1, const Quadric& H2, const LinearForm& E1,
                        const LinearForm& E2);

// Tangency curves of the fillet with each stub. Throws Error(EmptyConic) if
// either plane misses its stub quador.
std::pair<Conic, Conic> tangency_conics(const FilletPatch& patch);

// Largest distance from the hub center over both tangency conics; nullopt
// when either conic is unbounded.
std::optional<double> fillet_extent(const FilletPatch& patch);

// Distance from `center` to the farthest point of a compact conic.
double farthest_distance(const Conic& conic, const Vec3& center);

// Smallest principal radius of curvature of the fillet where the outward
// bisector of the two stub axes crosses it. Plane-pair fillets report
// +infinity. Throws Error(NoBisectorIntersection) if the ray misses Q.
double fillet_min_curvature_radius(const FilletPatch& patch);

// First positive parameter s with Q(origin + s dir) = 0, if any.
std::optional<double> first_ray_hit(const Quadric& q, const Vec3& origin, const Vec3& dir);

}  // namespace quadfillet
