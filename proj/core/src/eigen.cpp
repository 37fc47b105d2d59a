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

#include "quadfillet/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace quadfillet {
namespace {

constexpr int kMaxSweeps = 30;
constexpr double kOffDiagonalTolerance = 1e-14;

double off_diagonal_norm(const Mat3& a) {
  return std::sqrt(2.0 * (a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2)));
}

// Zero a(p,q) with a plane rotation; accumulates into v.
void rotate(Mat3& a, Mat3& v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
  const double c = 1.0 / std::hypot(t, 1.0);
  const double s = t * c;

  for (int k = 0; k < 3; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (int k = 0; k < 3; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = a(q, p) = 0.0;

  for (int k = 0; k < 3; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

Vec3 fix_sign(const Vec3& v) {
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  return v[best] < 0.0 ? -v : v;
}

}  // namespace

SymmetricEigen jacobi_eigen3(const Mat3& input) {
  Mat3 a = input;
  // Work on the symmetric part so tiny asymmetries do not stall convergence.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) a(i, j) = a(j, i) = 0.5 * (input(i, j) + input(j, i));

  Mat3 v = Mat3::identity();
  const double threshold = kOffDiagonalTolerance * frobenius_norm(a);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    rotate(a, v, 0, 1);
    rotate(a, v, 0, 2);
    rotate(a, v, 1, 2);
  }

  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j); });

  SymmetricEigen out;
  const Vec3 c0 = fix_sign(v.column(order[0]));
  const Vec3 c1 = fix_sign(v.column(order[1]));
  const Vec3 c2 = cross(c0, c1);
  out.vectors = Mat3::from_columns(c0, c1, c2);
  for (int i = 0; i < 3; ++i) out.values[i] = a(order[i], order[i]);
  return out;
}

}  // namespace quadfillet
