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

#include "quadfillet/chart.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "quadfillet/error.hpp"

namespace quadfillet {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int sgn(double v) { return v >= 0.0 ? 1 : -1; }

struct AxisSplit {
  std::vector<int> positive;
  std::vector<int> negative;
  std::vector<int> zero;
};

AxisSplit split_axes(const QuadricClass& cls) {
  AxisSplit s;
  for (int i = 0; i < 3; ++i) {
    if (cls.diagonal[i] > 0.0) s.positive.push_back(i);
    else if (cls.diagonal[i] < 0.0) s.negative.push_back(i);
    else s.zero.push_back(i);
  }
  return s;
}

}  // namespace

SurfaceChart::SurfaceChart(const Quadric& surface, const QuadricClass& cls)
    : surface_(surface), cls_(cls) {
  if (!has_chart(cls.kind))
    throw Error(ErrorCode::UnsupportedClass,
                "no chart for class " + std::string(to_string(cls.kind)));

  const auto& lam = cls_.diagonal;
  const double d = cls_.constant;
  const AxisSplit s = split_axes(cls_);
  const auto majority = s.positive.size() >= s.negative.size() ? s.positive : s.negative;
  const auto minority = s.positive.size() >= s.negative.size() ? s.negative : s.positive;

  switch (cls_.kind) {
    case QuadricKind::Ellipsoid:
      axis_ = {0, 1, 2};
      for (int r = 0; r < 3; ++r) scale_[r] = std::sqrt(-d / lam[axis_[r]]);
      break;
    case QuadricKind::HyperboloidOneSheet:
      axis_ = {majority[0], majority[1], minority[0]};
      scale_ = {std::sqrt(-d / lam[axis_[0]]), std::sqrt(-d / lam[axis_[1]]),
                std::sqrt(d / lam[axis_[2]])};
      break;
    case QuadricKind::HyperboloidTwoSheets:
      axis_ = {majority[0], majority[1], minority[0]};
      scale_ = {std::sqrt(d / lam[axis_[0]]), std::sqrt(d / lam[axis_[1]]),
                std::sqrt(-d / lam[axis_[2]])};
      break;
    case QuadricKind::EllipticParaboloid: {
      const auto& nz = s.positive.empty() ? s.negative : s.positive;
      axis_ = {nz[0], nz[1], s.zero[0]};
      scale_ = {std::sqrt(std::abs(lam[axis_[0]])), std::sqrt(std::abs(lam[axis_[1]])), 1.0};
      sign_ = lam[axis_[0]] > 0.0 ? 1 : -1;
      linear_ = cls_.linear[axis_[2]];
      break;
    }
    case QuadricKind::HyperbolicParaboloid:
      axis_ = {s.positive[0], s.negative[0], s.zero[0]};
      lambda_ = lam[axis_[0]];
      lambda2_ = lam[axis_[1]];
      linear_ = cls_.linear[axis_[2]];
      break;
    case QuadricKind::EllipticCylinder: {
      const auto& nz = s.positive.empty() ? s.negative : s.positive;
      axis_ = {nz[0], nz[1], s.zero[0]};
      scale_ = {std::sqrt(-d / lam[axis_[0]]), std::sqrt(-d / lam[axis_[1]]), 1.0};
      break;
    }
    case QuadricKind::HyperbolicCylinder: {
      // Role i is the transverse axis: its coefficient has the sign of -d.
      const int p = (lam[s.positive[0]] > 0.0) == (-d > 0.0) ? s.positive[0] : s.negative[0];
      const int q = p == s.positive[0] ? s.negative[0] : s.positive[0];
      axis_ = {p, q, s.zero[0]};
      scale_ = {std::sqrt(-d / lam[p]), std::sqrt(d / lam[q]), 1.0};
      break;
    }
    case QuadricKind::ParabolicCylinder: {
      const int i = s.positive.empty() ? s.negative[0] : s.positive[0];
      const int j = cls_.linear[s.zero[0]] != 0.0 ? s.zero[0] : s.zero[1];
      const int k = j == s.zero[0] ? s.zero[1] : s.zero[0];
      axis_ = {i, j, k};
      lambda_ = lam[i];
      linear_ = cls_.linear[j];
      break;
    }
    case QuadricKind::Cone:
      axis_ = {majority[0], majority[1], minority[0]};
      for (int r = 0; r < 3; ++r) scale_[r] = 1.0 / std::sqrt(std::abs(lam[axis_[r]]));
      break;
    default:
      break;
  }
}

Vec3 SurfaceChart::forward(double u, double v) const {
  double ri = 0.0;
  double rj = 0.0;
  double rk = 0.0;
  const auto& a = scale_;
  switch (cls_.kind) {
    case QuadricKind::Ellipsoid:
      ri = a[0] * std::cos(u) * std::cos(v);
      rj = a[1] * std::sin(u) * std::cos(v);
      rk = a[2] * std::sin(v);
      break;
    case QuadricKind::HyperboloidOneSheet:
      ri = a[0] * std::cosh(v) * std::cos(u);
      rj = a[1] * std::cosh(v) * std::sin(u);
      rk = a[2] * std::sinh(v);
      break;
    case QuadricKind::HyperboloidTwoSheets:
      ri = a[0] * std::tan(v) * std::cos(u);
      rj = a[1] * std::tan(v) * std::sin(u);
      rk = a[2] / std::cos(v);
      break;
    case QuadricKind::EllipticParaboloid:
      ri = v * std::cos(u) / a[0];
      rj = v * std::sin(u) / a[1];
      rk = -sign_ * v * v / (2.0 * linear_);
      break;
    case QuadricKind::HyperbolicParaboloid:
      ri = u;
      rj = v;
      rk = -(lambda_ * u * u + lambda2_ * v * v) / (2.0 * linear_);
      break;
    case QuadricKind::EllipticCylinder:
      ri = a[0] * std::cos(u);
      rj = a[1] * std::sin(u);
      rk = v;
      break;
    case QuadricKind::HyperbolicCylinder:
      ri = a[0] / std::cos(u);
      rj = a[1] * std::tan(u);
      rk = v;
      break;
    case QuadricKind::ParabolicCylinder:
      ri = u;
      rj = -lambda_ * u * u / (2.0 * linear_);
      rk = v;
      break;
    case QuadricKind::Cone:
      ri = a[0] * v * std::cos(u);
      rj = a[1] * v * std::sin(u);
      rk = a[2] * v;
      break;
    default:
      break;
  }
  Vec3 y;
  y[axis_[0]] = ri;
  y[axis_[1]] = rj;
  y[axis_[2]] = rk;
  return cls_.from_canonical(y);
}

ChartPoint SurfaceChart::inverse(const Vec3& p) const {
  const Vec3 y = cls_.to_canonical(p);
  const double yi = y[axis_[0]];
  const double yj = y[axis_[1]];
  const double yk = y[axis_[2]];
  const auto& a = scale_;
  switch (cls_.kind) {
    case QuadricKind::Ellipsoid:
      return {std::atan2(yj / a[1], yi / a[0]),
              std::atan2(yk / a[2], std::hypot(yi / a[0], yj / a[1]))};
    case QuadricKind::HyperboloidOneSheet:
      return {std::atan2(yj / a[1], yi / a[0]), std::asinh(yk / a[2])};
    case QuadricKind::HyperboloidTwoSheets: {
      const double s = sgn(yk);
      const double rho = std::hypot(yi / a[0], yj / a[1]);
      return {std::atan2(yj / a[1], yi / a[0]), std::atan2(s * rho, s)};
    }
    case QuadricKind::EllipticParaboloid:
      return {std::atan2(a[1] * yj, a[0] * yi), std::hypot(a[0] * yi, a[1] * yj)};
    case QuadricKind::HyperbolicParaboloid:
      return {yi, yj};
    case QuadricKind::EllipticCylinder:
      return {std::atan2(yj / a[1], yi / a[0]), yk};
    case QuadricKind::HyperbolicCylinder: {
      const double s = sgn(yi);
      return {std::atan2(s * yj / a[1], s), yk};
    }
    case QuadricKind::ParabolicCylinder:
      return {yi, yk};
    case QuadricKind::Cone: {
      const double v = yk / a[2];
      if (v == 0.0) return {0.0, 0.0};
      return {std::atan2(yj / (a[1] * v), yi / (a[0] * v)), v};
    }
    default:
      return {};
  }
}

std::optional<double> SurfaceChart::u_period() const {
  switch (cls_.kind) {
    case QuadricKind::HyperbolicParaboloid:
    case QuadricKind::ParabolicCylinder:
      return std::nullopt;
    default:
      return kTwoPi;
  }
}

std::optional<double> SurfaceChart::v_period() const {
  if (cls_.kind == QuadricKind::HyperboloidTwoSheets) return kTwoPi;
  return std::nullopt;
}

std::string SurfaceChart::domain() const {
  switch (cls_.kind) {
    case QuadricKind::Ellipsoid: return "u in (-pi, pi], v in [-pi/2, pi/2]";
    case QuadricKind::HyperboloidOneSheet: return "u in (-pi, pi], v real";
    case QuadricKind::HyperboloidTwoSheets:
      return "u in (-pi, pi], v in (-pi, pi] excluding |v| = pi/2; cos v selects the sheet";
    case QuadricKind::EllipticParaboloid: return "u in (-pi, pi], v >= 0";
    case QuadricKind::HyperbolicParaboloid: return "u, v real";
    case QuadricKind::EllipticCylinder: return "u in (-pi, pi], v real";
    case QuadricKind::HyperbolicCylinder:
      return "u in (-pi, pi] excluding |u| = pi/2; cos u selects the branch, v real";
    case QuadricKind::ParabolicCylinder: return "u, v real";
    case QuadricKind::Cone: return "u in (-pi, pi], v real; sign of v selects the nappe";
    default: return "";
  }
}

SurfaceChart parametrize(const Quadric& q, const QuadricClass& cls) { return SurfaceChart(q, cls); }

}  // namespace quadfillet
