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

#include "quadfillet/vec3.hpp"

namespace quadfillet {

// Affine function L(x) = g.x + c0. Planes G, F+, F-, E1 and E2 are all of this kind.
struct LinearForm {
  Vec3 g;
  double c0 = 0.0;

  double operator()(const Vec3& x) const { return dot(g, x) + c0; }

  LinearForm& operator+=(const LinearForm& o) { g += o.g; c0 += o.c0; return *this; }
  LinearForm& operator-=(const LinearForm& o) { g -= o.g; c0 -= o.c0; return *this; }
  LinearForm& operator*=(double s) { g *= s; c0 *= s; return *this; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

inline LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
inline LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
inline LinearForm operator-(const LinearForm& a) { return {-a.g, -a.c0}; }
inline LinearForm operator*(double s, LinearForm a) { return a *= s; }
inline LinearForm operator*(LinearForm a, double s) { return a *= s; }

double eval_linear(const LinearForm& form, const Vec3& x);

// Q(x) = x^T A x + 2 b^T x + c with A symmetric.
struct Quadric {
  Mat3 A;
  Vec3 b;
  double c = 0.0;

  // The ten independent coefficients in the order
  // A00, A11, A22, A01, A02, A12, b0, b1, b2, c.
  using Coefficients = std::array<double, 10>;

  Coefficients coefficients() const;
  static Quadric from_coefficients(const Coefficients& k);

  double operator()(const Vec3& x) const;

  friend bool operator==(const Quadric&, const Quadric&) = default;
};

Quadric operator+(const Quadric& p, const Quadric& q);
Quadric operator-(const Quadric& p, const Quadric& q);
Quadric operator*(double s, const Quadric& q);

double eval_quadric(const Quadric& q, const Vec3& x);
Vec3 gradient(const Quadric& q, const Vec3& x);

// Hessian of Q, i.e. 2A.
Mat3 hessian(const Quadric& q);

// Q - L^2, formed coefficientwise: A - g g^T, b - c0 g, c - c0^2.
Quadric subtract_square(const Quadric& q, const LinearForm& l);

// The quadric L1 * L2.
Quadric product(const LinearForm& l1, const LinearForm& l2);

// Euclidean norm of the ten independent coefficients.
double coefficient_norm(const Quadric& q);

// Largest coefficientwise difference divided by the norm of `reference`.
double relative_coefficient_deviation(const Quadric& q, const Quadric& reference);

// Magnitude bound of the terms of Q at x: |A||x|^2 + 2|b||x| + |c|.
// Used as the scale for relative surface residuals.
double residual_scale(const Quadric& q, const Vec3& x);

bool is_finite(const Quadric& q);

}  // namespace quadfillet
