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

#include "quadfillet/conics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "quadfillet/error.hpp"

namespace quadfillet {
namespace {

constexpr double kOnSurfaceTolerance = 1e-9;

int sign(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

double unwrap(double value, double previous, double period) {
  return value - period * std::round((value - previous) / period);
}

}  // namespace

std::string_view to_string(ConicKind kind) {
  switch (kind) {
    case ConicKind::Ellipse: return "ELLIPSE";
    case ConicKind::Circle: return "CIRCLE";
    case ConicKind::Parabola: return "PARABOLA";
    case ConicKind::Hyperbola: return "HYPERBOLA";
    case ConicKind::ParallelLines: return "PARALLEL_LINES";
    case ConicKind::CrossingLines: return "CROSSING_LINES";
    case ConicKind::SingleLine: return "SINGLE_LINE";
    case ConicKind::Point: return "POINT";
    case ConicKind::Empty: return "EMPTY";
  }
  return "UNKNOWN";
}

bool is_compact(ConicKind kind) {
  return kind == ConicKind::Ellipse || kind == ConicKind::Circle || kind == ConicKind::Point;
}

PlaneFrame plane_frame(const LinearForm& e) {
  const double gn = norm(e.g);
  if (gn == 0.0) throw Error(ErrorCode::ZeroGradient, "plane form has zero gradient");
  PlaneFrame f;
  f.normal = e.g / gn;
  int least = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(f.normal[i]) < std::abs(f.normal[least])) least = i;
  Vec3 axis;
  axis[least] = 1.0;
  f.u = normalized(cross(f.normal, axis));
  f.v = cross(f.normal, f.u);
  f.origin = (-e.c0 / (gn * gn)) * e.g;
  return f;
}

ConicClassification classify_conic(const ConicCoefficients& k, double tol) {
  const double cmax = std::max({std::abs(k.a), std::abs(k.b), std::abs(k.c), std::abs(k.d),
                                std::abs(k.e), std::abs(k.f)});
  if (cmax == 0.0) throw Error(ErrorCode::AllZero, "conic has no non-zero coefficient");

  ConicCanonical cn;
  const double second = std::max({std::abs(k.a), std::abs(k.b), std::abs(k.c)});

  if (second <= tol * cmax) {
    // Affine equation 2d s + 2e t + f = 0.
    const double m = std::hypot(k.d, k.e);
    if (m <= tol * cmax) return {ConicKind::Empty, cn};
    cn.axis2_s = k.d / m;
    cn.axis2_t = k.e / m;
    cn.axis1_s = cn.axis2_t;
    cn.axis1_t = -cn.axis2_s;
    cn.center_s = -k.f * cn.axis2_s / (2.0 * m);
    cn.center_t = -k.f * cn.axis2_t / (2.0 * m);
    cn.m = m;
    return {ConicKind::SingleLine, cn};
  }

  // Principal axes of [[a, b], [b, c]].
  const double theta = 0.5 * std::atan2(2.0 * k.b, k.a - k.c);
  double cs = std::cos(theta);
  double sn = std::sin(theta);
  double l1 = k.a * cs * cs + 2.0 * k.b * cs * sn + k.c * sn * sn;
  double l2 = k.a * sn * sn - 2.0 * k.b * cs * sn + k.c * cs * cs;
  double a1s = cs, a1t = sn, a2s = -sn, a2t = cs;
  if (std::abs(l2) > std::abs(l1)) {
    std::swap(l1, l2);
    // (axis1, axis2) <- (axis2, -axis1) keeps the orientation.
    const double o1s = a1s, o1t = a1t;
    a1s = a2s;
    a1t = a2t;
    a2s = -o1s;
    a2t = -o1t;
  }
  const bool rank2 = std::abs(l2) > tol * std::abs(l1);
  if (!rank2) l2 = 0.0;

  const double dp = k.d * a1s + k.e * a1t;
  const double ep = k.d * a2s + k.e * a2t;
  cn.axis1_s = a1s;
  cn.axis1_t = a1t;
  cn.axis2_s = a2s;
  cn.axis2_t = a2t;
  cn.l1 = l1;
  cn.l2 = l2;

  double p0 = -dp / l1;
  double q0 = 0.0;
  double constant = k.f - dp * dp / l1;
  double completed = dp * dp / std::abs(l1);
  ConicKind kind = ConicKind::Empty;

  if (rank2) {
    q0 = -ep / l2;
    constant -= ep * ep / l2;
    completed += ep * ep / std::abs(l2);
    const bool zero_const = std::abs(constant) <= tol * std::max(std::abs(k.f), completed);
    if (sign(l1) == sign(l2)) {
      if (zero_const) kind = ConicKind::Point;
      else if (sign(-constant) == sign(l1))
        kind = std::abs(l1 - l2) <= tol * std::abs(l1) ? ConicKind::Circle : ConicKind::Ellipse;
      else kind = ConicKind::Empty;
    } else {
      kind = zero_const ? ConicKind::CrossingLines : ConicKind::Hyperbola;
    }
    if (zero_const) constant = 0.0;
  } else {
    const double lin_tol =
        tol * std::max({std::abs(k.d), std::abs(k.e), std::sqrt(std::abs(l1 * k.f))});
    if (std::abs(ep) > lin_tol) {
      q0 = -constant / (2.0 * ep);
      cn.m = ep;
      constant = 0.0;
      kind = ConicKind::Parabola;
    } else {
      const bool zero_const = std::abs(constant) <= tol * std::max(std::abs(k.f), completed);
      if (zero_const) {
        constant = 0.0;
        kind = ConicKind::SingleLine;
      } else {
        kind = sign(-constant) == sign(l1) ? ConicKind::ParallelLines : ConicKind::Empty;
      }
    }
  }

  cn.center_s = p0 * a1s + q0 * a2s;
  cn.center_t = p0 * a1t + q0 * a2t;
  cn.k = constant;
  return {kind, cn};
}

Conic intersect_quadric_plane(const Quadric& q, const LinearForm& e, double tol) {
  Conic out;
  out.frame = plane_frame(e);
  const PlaneFrame& f = out.frame;
  const Vec3 au = q.A * f.u;
  const Vec3 av = q.A * f.v;
  const Vec3 lin = q.A * f.origin + q.b;
  out.coefficients = {dot(f.u, au), dot(f.u, av), dot(f.v, av),
                      dot(f.u, lin), dot(f.v, lin), q(f.origin)};
  const ConicClassification cls = classify_conic(out.coefficients, tol);
  out.kind = cls.kind;
  out.canonical = cls.canonical;
  return out;
}

std::vector<ConicBranch> sample_conic_branches(const Conic& conic, int n, double range) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "sample count must be >= 2");
  if (conic.kind == ConicKind::Point || conic.kind == ConicKind::Empty)
    throw Error(ErrorCode::NotACurve, "conic class " + std::string(to_string(conic.kind)));

  const ConicCanonical& cn = conic.canonical;
  auto to_world = [&](double p, double q) {
    const double s = cn.center_s + p * cn.axis1_s + q * cn.axis2_s;
    const double t = cn.center_t + p * cn.axis1_t + q * cn.axis2_t;
    return conic.frame.point(s, t);
  };
  auto open_branch = [&](int count, auto&& pq) {
    ConicBranch br;
    br.param_min = -range;
    br.param_max = range;
    for (int i = 0; i < count; ++i) {
      const double tau = count == 1 ? 0.0 : -range + 2.0 * range * i / (count - 1);
      const auto [p, q] = pq(tau);
      br.points.push_back(to_world(p, q));
    }
    return br;
  };
  const int first = (n + 1) / 2;
  const int second = n - first;

  std::vector<ConicBranch> out;
  switch (conic.kind) {
    case ConicKind::Ellipse:
    case ConicKind::Circle: {
      const double ra = std::sqrt(-cn.k / cn.l1);
      const double rb = std::sqrt(-cn.k / cn.l2);
      ConicBranch br;
      br.closed = true;
      br.param_min = 0.0;
      br.param_max = 2.0 * std::numbers::pi;
      for (int i = 0; i < n; ++i) {
        const double th = 2.0 * std::numbers::pi * i / n;
        br.points.push_back(to_world(ra * std::cos(th), rb * std::sin(th)));
      }
      out.push_back(std::move(br));
      break;
    }
    case ConicKind::Hyperbola: {
      // Transverse axis is the one whose coefficient has the sign of -k.
      const bool p_transverse = sign(-cn.k) == sign(cn.l1);
      const double ra = std::sqrt(std::abs(cn.k / cn.l1));
      const double rb = std::sqrt(std::abs(cn.k / cn.l2));
      for (int side : {1, -1}) {
        out.push_back(open_branch(side == 1 ? first : second, [&](double tau) {
          return p_transverse
                     ? std::pair{side * ra * std::cosh(tau), rb * std::sinh(tau)}
                     : std::pair{ra * std::sinh(tau), side * rb * std::cosh(tau)};
        }));
      }
      break;
    }
    case ConicKind::Parabola:
      out.push_back(open_branch(n, [&](double tau) {
        return std::pair{tau, -cn.l1 * tau * tau / (2.0 * cn.m)};
      }));
      break;
    case ConicKind::ParallelLines: {
      const double ra = std::sqrt(-cn.k / cn.l1);
      for (int side : {1, -1}) {
        out.push_back(open_branch(side == 1 ? first : second,
                                  [&](double tau) { return std::pair{side * ra, tau}; }));
      }
      break;
    }
    case ConicKind::CrossingLines: {
      const double ds = std::sqrt(std::abs(cn.l2));
      const double dt = std::sqrt(std::abs(cn.l1));
      const double h = std::hypot(ds, dt);
      for (int side : {1, -1}) {
        out.push_back(open_branch(side == 1 ? first : second, [&](double tau) {
          return std::pair{tau * ds / h, side * tau * dt / h};
        }));
      }
      break;
    }
    case ConicKind::SingleLine:
      // Rank one (l1 p^2 = 0): the line p = 0. Affine: the line q = 0.
      out.push_back(open_branch(n, [&](double tau) {
        return cn.l1 != 0.0 ? std::pair{0.0, tau} : std::pair{tau, 0.0};
      }));
      break;
    default:
      break;
  }
  for (auto& br : out) br.points.shrink_to_fit();
  std::erase_if(out, [](const ConicBranch& b) { return b.points.empty(); });
  return out;
}

std::vector<Vec3> sample_conic(const Conic& conic, int n, double range) {
  std::vector<Vec3> pts;
  for (const auto& br : sample_conic_branches(conic, n, range))
    pts.insert(pts.end(), br.points.begin(), br.points.end());
  return pts;
}

std::vector<ChartPoint> pcurve(const Conic& conic, const SurfaceChart& chart, int n,
                               double range) {
  const Quadric& surface = chart.surface();
  const auto up = chart.u_period();
  const auto vp = chart.v_period();
  std::vector<ChartPoint> out;
  for (const auto& br : sample_conic_branches(conic, n, range)) {
    bool first = true;
    ChartPoint prev;
    for (const Vec3& p : br.points) {
      const double scale = std::max(1.0, residual_scale(surface, p));
      if (std::abs(surface(p)) > kOnSurfaceTolerance * scale)
        throw Error(ErrorCode::PointOffSurface, "conic sample is not on the chart surface");
      ChartPoint c = chart.inverse(p);
      if (!first) {
        if (up) c.u = unwrap(c.u, prev.u, *up);
        if (vp) c.v = unwrap(c.v, prev.v, *vp);
      }
      out.push_back(c);
      prev = c;
      first = false;
    }
  }
  return out;
}

}  // namespace quadfillet
