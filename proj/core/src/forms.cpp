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

#include "quadfillet/forms.hpp"

#include <algorithm>
#include <cmath>

namespace quadfillet {

double eval_linear(const LinearForm& form, const Vec3& x) { return form(x); }

Quadric::Coefficients Quadric::coefficients() const {
  return {A(0, 0), A(1, 1), A(2, 2), A(0, 1), A(0, 2), A(1, 2), b.x, b.y, b.z, c};
}

Quadric Quadric::from_coefficients(const Coefficients& k) {
  Quadric q;
  q.A(0, 0) = k[0];
  q.A(1, 1) = k[1];
  q.A(2, 2) = k[2];
  q.A(0, 1) = q.A(1, 0) = k[3];
  q.A(0, 2) = q.A(2, 0) = k[4];
  q.A(1, 2) = q.A(2, 1) = k[5];
  q.b = {k[6], k[7], k[8]};
  q.c = k[9];
  return q;
}

double Quadric::operator()(const Vec3& x) const { return dot(x, A * x) + 2.0 * dot(b, x) + c; }

Quadric operator+(const Quadric& p, const Quadric& q) {
  auto a = p.coefficients();
  const auto bq = q.coefficients();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += bq[i];
  return Quadric::from_coefficients(a);
}

Quadric operator-(const Quadric& p, const Quadric& q) {
  auto a = p.coefficients();
  const auto bq = q.coefficients();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= bq[i];
  return Quadric::from_coefficients(a);
}

Quadric operator*(double s, const Quadric& q) {
  auto a = q.coefficients();
  for (double& v : a) v *= s;
  return Quadric::from_coefficients(a);
}

double eval_quadric(const Quadric& q, const Vec3& x) { return q(x); }

Vec3 gradient(const Quadric& q, const Vec3& x) { return 2.0 * (q.A * x + q.b); }

Mat3 hessian(const Quadric& q) {
  Mat3 h = q.A;
  for (auto& row : h.m)
    for (double& v : row) v *= 2.0;
  return h;
}

Quadric subtract_square(const Quadric& q, const LinearForm& l) {
  Quadric r = q;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.A(i, j) = q.A(i, j) - l.g[i] * l.g[j];
  r.b = q.b - l.c0 * l.g;
  r.c = q.c - l.c0 * l.c0;
  return r;
}

Quadric product(const LinearForm& l1, const LinearForm& l2) {
  Quadric r;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const double v = 0.5 * (l1.g[i] * l2.g[j] + l2.g[i] * l1.g[j]);
      r.A(i, j) = v;
      r.A(j, i) = v;
    }
  r.b = 0.5 * (l1.c0 * l2.g + l2.c0 * l1.g);
  r.c = l1.c0 * l2.c0;
  return r;
}

double coefficient_norm(const Quadric& q) {
  double s = 0.0;
  for (double v : q.coefficients()) s += v * v;
  return std::sqrt(s);
}

double relative_coefficient_deviation(const Quadric& q, const Quadric& reference) {
  const auto a = q.coefficients();
  const auto b = reference.coefficients();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  const double n = coefficient_norm(reference);
  return n > 0.0 ? worst / n : worst;
}

double residual_scale(const Quadric& q, const Vec3& x) {
  const double r = norm(x);
  return frobenius_norm(q.A) * r * r + 2.0 * norm(q.b) * r + std::abs(q.c);
}

bool is_finite(const Quadric& q) {
  for (double v : q.coefficients())
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace quadfillet
