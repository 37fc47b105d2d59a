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

#include "quadfillet/quadric_class.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "quadfillet/eigen.hpp"
#include "quadfillet/error.hpp"

namespace quadfillet {
namespace {

constexpr double kAllZero = 1e-14;

int sign(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Right-handed orthonormal frame whose first column is n.
Mat3 frame_with_first_axis(const Vec3& n) {
  int least = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(n[i]) < std::abs(n[least])) least = i;
  Vec3 e;
  e[least] = 1.0;
  const Vec3 u = normalized(cross(n, e));
  return Mat3::from_columns(n, u, cross(n, u));
}

}  // namespace

std::string_view to_string(QuadricKind kind) {
  switch (kind) {
    case QuadricKind::Ellipsoid: return "ELLIPSOID";
    case QuadricKind::HyperboloidOneSheet: return "HYPERBOLOID_ONE_SHEET";
    case QuadricKind::HyperboloidTwoSheets: return "HYPERBOLOID_TWO_SHEETS";
    case QuadricKind::EllipticParaboloid: return "ELLIPTIC_PARABOLOID";
    case QuadricKind::HyperbolicParaboloid: return "HYPERBOLIC_PARABOLOID";
    case QuadricKind::EllipticCylinder: return "ELLIPTIC_CYLINDER";
    case QuadricKind::HyperbolicCylinder: return "HYPERBOLIC_CYLINDER";
    case QuadricKind::ParabolicCylinder: return "PARABOLIC_CYLINDER";
    case QuadricKind::Cone: return "CONE";
    case QuadricKind::ParallelPlanes: return "PARALLEL_PLANES";
    case QuadricKind::CrossingPlanes: return "CROSSING_PLANES";
    case QuadricKind::SinglePlane: return "SINGLE_PLANE";
    case QuadricKind::Line: return "LINE";
    case QuadricKind::Point: return "POINT";
    case QuadricKind::Empty: return "EMPTY";
  }
  return "UNKNOWN";
}

bool is_plane_pair(QuadricKind kind) {
  return kind == QuadricKind::ParallelPlanes || kind == QuadricKind::CrossingPlanes ||
         kind == QuadricKind::SinglePlane;
}

bool has_chart(QuadricKind kind) {
  switch (kind) {
    case QuadricKind::Ellipsoid:
    case QuadricKind::HyperboloidOneSheet:
    case QuadricKind::HyperboloidTwoSheets:
    case QuadricKind::EllipticParaboloid:
    case QuadricKind::HyperbolicParaboloid:
    case QuadricKind::EllipticCylinder:
    case QuadricKind::HyperbolicCylinder:
    case QuadricKind::ParabolicCylinder:
    case QuadricKind::Cone:
      return true;
    default:
      return false;
  }
}

QuadricClass classify_quadric(const Quadric& q, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "classification tolerance must be > 0");
  {
    double biggest = 0.0;
    for (double v : q.coefficients()) biggest = std::max(biggest, std::abs(v));
    if (biggest <= kAllZero) throw Error(ErrorCode::AllZero, "quadric has no non-zero coefficient");
  }

  QuadricClass out;
  const SymmetricEigen eig = jacobi_eigen3(q.A);
  double lmax = 0.0;
  for (double l : eig.values) lmax = std::max(lmax, std::abs(l));

  // Rank zero: Q is affine.
  if (lmax <= kAllZero) {
    const double m = norm(q.b);
    if (m > kAllZero) {
      const Vec3 n = q.b / m;
      out.kind = QuadricKind::SinglePlane;
      out.rotation = frame_with_first_axis(n);
      out.linear = {m, 0.0, 0.0};
      out.translation = (-q.c / (2.0 * m)) * n;
    } else {
      out.kind = QuadricKind::Empty;
      out.constant = q.c;
    }
    return out;
  }

  Mat3 rot = eig.vectors;
  std::array<double, 3> lam = eig.values;
  std::vector<int> nonzero;
  std::vector<int> zero;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(lam[i]) <= tol * lmax) {
      lam[i] = 0.0;
      zero.push_back(i);
    } else {
      nonzero.push_back(i);
    }
  }

  const Vec3 bp = rot.transposed() * q.b;
  Vec3 shift;
  double d = q.c;
  double completed = 0.0;
  for (int i : nonzero) {
    shift[i] = -bp[i] / lam[i];
    d -= bp[i] * bp[i] / lam[i];
    completed += bp[i] * bp[i] / std::abs(lam[i]);
  }
  const double const_tol = tol * std::max(std::abs(q.c), completed);
  const double lin_tol = tol * std::max(norm(q.b), std::sqrt(lmax * std::abs(q.c)));
  const bool d_zero = std::abs(d) <= const_tol;

  Vec3 linear;
  QuadricKind kind = QuadricKind::Empty;

  if (nonzero.size() == 3) {
    int pos = 0;
    for (double l : lam) pos += l > 0.0 ? 1 : 0;
    if (pos == 3 || pos == 0) {
      const int s = pos == 3 ? 1 : -1;
      if (d_zero) kind = QuadricKind::Point;
      else kind = sign(-d) == s ? QuadricKind::Ellipsoid : QuadricKind::Empty;
    } else {
      const int majority = pos == 2 ? 1 : -1;
      if (d_zero) kind = QuadricKind::Cone;
      else kind = sign(-d) == majority ? QuadricKind::HyperboloidOneSheet
                                       : QuadricKind::HyperboloidTwoSheets;
    }
  } else if (nonzero.size() == 2) {
    const int k = zero[0];
    const bool same = sign(lam[nonzero[0]]) == sign(lam[nonzero[1]]);
    if (std::abs(bp[k]) > lin_tol) {
      linear[k] = bp[k];
      shift[k] = -d / (2.0 * bp[k]);
      d = 0.0;
      kind = same ? QuadricKind::EllipticParaboloid : QuadricKind::HyperbolicParaboloid;
    } else if (same) {
      if (d_zero) kind = QuadricKind::Line;
      else kind = sign(-d) == sign(lam[nonzero[0]]) ? QuadricKind::EllipticCylinder
                                                     : QuadricKind::Empty;
    } else {
      kind = d_zero ? QuadricKind::CrossingPlanes : QuadricKind::HyperbolicCylinder;
    }
  } else {
    const int i = nonzero[0];
    const int j = zero[0];
    const int k = zero[1];
    const double m = std::hypot(bp[j], bp[k]);
    if (m > lin_tol) {
      // Rotate the null plane so the linear term lies along axis j only.
      const Vec3 rj = rot.column(j);
      const Vec3 rk = rot.column(k);
      const Vec3 nj = (bp[j] / m) * rj + (bp[k] / m) * rk;
      const Vec3 nk = (-bp[k] / m) * rj + (bp[j] / m) * rk;
      for (int r = 0; r < 3; ++r) {
        rot(r, j) = nj[r];
        rot(r, k) = nk[r];
      }
      linear[j] = m;
      shift[j] = -d / (2.0 * m);
      shift[k] = 0.0;
      d = 0.0;
      kind = QuadricKind::ParabolicCylinder;
    } else if (d_zero) {
      kind = QuadricKind::SinglePlane;
    } else {
      kind = sign(-d) == sign(lam[i]) ? QuadricKind::ParallelPlanes : QuadricKind::Empty;
    }
  }

  if (d_zero && kind != QuadricKind::Empty) d = 0.0;

  out.kind = kind;
  out.rotation = rot;
  out.translation = rot * shift;
  out.diagonal = lam;
  out.linear = linear;
  out.constant = d;
  return out;
}

Quadric reconstruct(const QuadricClass& cls) {
  const Mat3& r = cls.rotation;
  const Mat3 m = r * Mat3::diagonal(cls.diagonal[0], cls.diagonal[1], cls.diagonal[2]) *
                 r.transposed();
  const Vec3 w = r * cls.linear;
  const Vec3& t = cls.translation;
  Quadric q;
  q.A = m;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) q.A(i, j) = q.A(j, i) = 0.5 * (m(i, j) + m(j, i));
  const Vec3 mt = m * t;
  q.b = w - mt;
  q.c = dot(t, mt) - 2.0 * dot(w, t) + cls.constant;
  return q;
}

bool is_circular(const QuadricClass& cls, double tol) {
  std::vector<double> nz;
  for (double l : cls.diagonal)
    if (l != 0.0) nz.push_back(l);
  if (nz.size() < 2) return false;
  // Only entries sharing the majority sign set a circular cross-section.
  std::vector<double> same_sign;
  int pos = 0;
  for (double l : nz) pos += l > 0.0 ? 1 : 0;
  const bool want_pos = 2 * pos >= static_cast<int>(nz.size());
  for (double l : nz)
    if ((l > 0.0) == want_pos) same_sign.push_back(std::abs(l));
  if (same_sign.size() < 2) return false;
  const double lo = *std::min_element(same_sign.begin(), same_sign.end());
  const double hi = *std::max_element(same_sign.begin(), same_sign.end());
  return hi - lo <= tol * hi;
}

}  // namespace quadfillet
