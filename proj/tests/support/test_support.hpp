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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "quadfillet/forms.hpp"
#include "quadfillet/lattice.hpp"

namespace qf_test {

using quadfillet::LinearForm;
using quadfillet::Mat3;
using quadfillet::Quadric;
using quadfillet::Vec3;

inline std::string data_path(const std::string& name) { return std::string(QF_DATA_DIR) + "/" + name; }

// Seeded generator for property tests. Every test constructs its own with a
// fixed seed so failures reproduce.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }

  Vec3 point(double extent) { return {uniform(-extent, extent), uniform(-extent, extent), uniform(-extent, extent)}; }

  Vec3 unit() {
    while (true) {
      const Vec3 p = point(1.0);
      const double n = quadfillet::norm(p);
      if (n > 0.1 && n <= 1.0) return p / n;
    }
  }

  // Uniform rotation from a random unit quaternion.
  Mat3 rotation() {
    double q[4];
    double n = 0.0;
    do {
      n = 0.0;
      for (double& c : q) {
        c = uniform(-1.0, 1.0);
        n += c * c;
      }
    } while (n < 0.01 || n > 1.0);
    n = std::sqrt(n);
    const double w = q[0] / n, x = q[1] / n, y = q[2] / n, z = q[3] / n;
    Mat3 r;
    r.m = {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
            {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
            {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
    return r;
  }

  Quadric quadric(double extent = 2.0) {
    Quadric q;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) q.A.m[i][j] = q.A.m[j][i] = uniform(-extent, extent);
    q.b = point(extent);
    q.c = uniform(-extent, extent);
    return q;
  }

  LinearForm linear(double extent = 2.0) { return {point(extent), uniform(-extent, extent)}; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// A hub sphere with two non-parallel stub planes that cut it, as the fillet
// construction expects: radius in [0.5, 2], |G(c)| / |grad G| < r, gradient
// length in [0.5, 2], beta in [0.1, 2].
struct StubPair {
  quadfillet::StubView s1;
  quadfillet::StubView s2;
  double beta = 1.0;
};

inline quadfillet::StubView random_stub(Rng& rng, const Vec3& center, double radius, const Vec3& axis) {
  quadfillet::StubView v;
  v.hub = "h";
  v.hub_center = center;
  v.hub_radius = radius;
  v.axis = axis;
  const double lambda = rng.uniform(0.5, 2.0);
  const double offset = rng.uniform(-0.9, 0.9) * radius;  // signed distance of the plane from c
  v.G = {lambda * axis, -lambda * (quadfillet::dot(axis, center) + offset)};
  v.H = quadfillet::subtract_square(quadfillet::sphere_quadric({"h", center, radius}), v.G);
  return v;
}

inline StubPair random_stub_pair(Rng& rng) {
  const Vec3 center = rng.point(3.0);
  const double radius = rng.uniform(0.5, 2.0);
  const Vec3 a1 = rng.unit();
  Vec3 a2;
  do {
    a2 = rng.unit();
  } while (quadfillet::norm(quadfillet::cross(a1, a2)) < 0.2 || quadfillet::dot(a1, a2) < -0.9);
  StubPair out{random_stub(rng, center, radius, a1), random_stub(rng, center, radius, a2), rng.uniform(0.1, 2.0)};
  out.s1.beam = "b1";
  out.s2.beam = "b2";
  return out;
}

// Two hubs and a k for which both tangency planes cut their spheres.
struct BeamConfig {
  quadfillet::Hub a;
  quadfillet::Hub b;
  double k = 0.0;
};

inline BeamConfig random_beam(Rng& rng) {
  while (true) {
    BeamConfig c{{"a", rng.point(3.0), rng.uniform(0.5, 2.0)}, {"b", {}, rng.uniform(0.5, 2.0)}, 0.0};
    const double d = rng.uniform(c.a.radius + c.b.radius + 0.5, 8.0);
    c.b.center = c.a.center + d * rng.unit();
    c.k = d * rng.uniform(0.7, 1.5);
    try {
      (void)quadfillet::beam_quador(c.a, c.b, c.k);
      return c;
    } catch (const std::exception&) {
    }
  }
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace qf_test
