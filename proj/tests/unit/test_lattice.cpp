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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "poly_oracle.hpp"
#include "quadfillet/error.hpp"
#include "quadfillet/lattice.hpp"
#include "test_support.hpp"

namespace qf = quadfillet;
using qf::Hub;
using qf::Lattice;
using qf::Quadric;
using qf::Vec3;
using qf_test::frac;
using qf_test::Poly;
using qf_test::Rational;

namespace {

Lattice two_beam() {
  Lattice l;
  l.hubs = {{"h0", {0, 0, 0}, 1}, {"h1", {4, 0, 0}, 1}, {"h2", {0, 4, 0}, 1}};
  l.beams = {{"b0", "h0", "h1", 4}, {"b1", "h0", "h2", 4}};
  l.fillets = {{"h0", "b0", "b1", 1.0}};
  return l;
}

qf::ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const qf::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return qf::ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Sphere, QuadricExamples) {
  const Quadric s = qf::sphere_quadric({"h", {0, 0, 0}, 1});
  EXPECT_EQ(s, (qf_test::sphere(0, 0, 0, 1)).to_quadric());
  EXPECT_EQ(s({0, 0, 0}), -1.0);
  EXPECT_EQ(qf::sphere_quadric({"h", {4, 0, 0}, 2}), qf_test::sphere(4, 0, 0, 2).to_quadric());
  qf_test::Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    const Hub h{"h", rng.point(3), rng.uniform(0.5, 2)};
    EXPECT_NEAR(qf::sphere_quadric(h)(h.center + Vec3{h.radius, 0, 0}), 0.0, 1e-13);
  }
}

TEST(BeamQuador, SymmetricCylinder) {
  const auto g = qf::beam_quador({"a", {0, 0, 0}, 1}, {"b", {4, 0, 0}, 1}, 4);
  EXPECT_EQ(g.H, (Poly::y() * Poly::y() + Poly::z() * Poly::z() - 1).to_quadric());
  EXPECT_EQ(g.G_a.g, (Vec3{1, 0, 0}));
  EXPECT_EQ(g.G_a.c0, 0.0);
  EXPECT_EQ(g.G_b.g, (Vec3{-1, 0, 0}));
  EXPECT_EQ(g.G_b.c0, 4.0);
}

TEST(BeamQuador, AsymmetricMatchesSymbolicExpansion) {
  // Oracle: L = S_a - S_b, G_a = (L/k + k)/2, G_b = G_a - k, expanded exactly.
  const Poly sa = qf_test::sphere(0, 0, 0, 1);
  const Poly sb = qf_test::sphere(4, 0, 0, 2);
  const Rational k = 4;
  const Poly ga = ((sa - sb) * (1 / k) + k) * frac(1, 2);
  const Poly gb = ga - k;
  EXPECT_EQ(sa - ga * ga, sb - gb * gb);
  const Poly expected_h = Poly::y() * Poly::y() + Poly::z() * Poly::z() - frac(3, 4) * Poly::x() - frac(73, 64);
  EXPECT_EQ(sa - ga * ga, expected_h);
  EXPECT_EQ(ga, Poly::x() + frac(3, 8));

  const auto g = qf::beam_quador({"a", {0, 0, 0}, 1}, {"b", {4, 0, 0}, 2}, 4);
  EXPECT_LE(qf::relative_coefficient_deviation(g.H, expected_h.to_quadric()), 1e-12);
  EXPECT_EQ(g.G_a.g, (Vec3{1, 0, 0}));
  EXPECT_DOUBLE_EQ(g.G_a.c0, 0.375);
  EXPECT_EQ(g.G_b.g, (Vec3{-1, 0, 0}));
  EXPECT_DOUBLE_EQ(g.G_b.c0, 29.0 / 8);
}

TEST(BeamQuador, Errors) {
  EXPECT_EQ(code_of([] { qf::beam_quador({"a", {0, 0, 0}, 1}, {"b", {4, 0, 0}, 1}, 0); }),
            qf::ErrorCode::DegenerateK);
  // k far below the distance pushes the tangency planes outside the spheres.
  try {
    qf::beam_quador({"a", {0, 0, 0}, 1}, {"b", {4, 0, 0}, 1}, 0.5);
    FAIL();
  } catch (const qf::Error& e) {
    EXPECT_EQ(e.code(), qf::ErrorCode::PlaneMissesSphere);
    EXPECT_TRUE(e.detail() == "a" || e.detail() == "b");
  }
}

TEST(BeamQuador, TwoSphereTangencyProperty) {
  qf_test::Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto c = qf_test::random_beam(rng);
    const auto g = qf::beam_quador(c.a, c.b, c.k);
    const Quadric from_a = qf::subtract_square(qf::sphere_quadric(c.a), g.G_a);
    const Quadric from_b = qf::subtract_square(qf::sphere_quadric(c.b), g.G_b);
    EXPECT_LE(qf::relative_coefficient_deviation(from_a, from_b), 1e-12);
    EXPECT_LE(qf::relative_coefficient_deviation(g.H, from_a), 1e-12);
    EXPECT_GT(g.G_a(c.b.center), 0.0);
    EXPECT_GT(g.G_b(c.a.center), 0.0);
  }
}

TEST(BeamQuador, SignNormalizationLeavesHUnchanged) {
  qf_test::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto c = qf_test::random_beam(rng);
    const auto g = qf::beam_quador(c.a, c.b, c.k);
    const Quadric s = qf::sphere_quadric(c.a);
    EXPECT_EQ(qf::subtract_square(s, g.G_a), qf::subtract_square(s, -g.G_a));
  }
}

TEST(BeamQuador, SphereStubGradientOnTangencyCircle) {
  qf_test::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto c = qf_test::random_beam(rng);
    const auto g = qf::beam_quador(c.a, c.b, c.k);
    const Quadric s = qf::sphere_quadric(c.a);
    const Vec3 n = qf::normalized(g.G_a.g);
    const double d = -g.G_a(c.a.center) / qf::norm(g.G_a.g);
    const double rho = std::sqrt(c.a.radius * c.a.radius - d * d);
    const Vec3 u = qf::normalized(qf::cross(n, std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0}));
    const Vec3 v = qf::cross(n, u);
    for (int j = 0; j < 32; ++j) {
      const double t = 2 * std::numbers::pi * j / 32;
      const Vec3 p = c.a.center + d * n + rho * (std::cos(t) * u + std::sin(t) * v);
      const Vec3 gs = qf::gradient(s, p);
      EXPECT_LE(qf::norm(qf::gradient(g.H, p) - gs), 1e-12 * qf::norm(gs));
    }
  }
}

TEST(BeamRadius, Examples) {
  const auto cyl = qf::beam_quador({"a", {0, 0, 0}, 1}, {"b", {4, 0, 0}, 1}, 4);
  for (double s : {0.0, 1.0, 2.5, 4.0}) EXPECT_NEAR(*qf::beam_radius(cyl, s), 1.0, 1e-15);
  const auto asym = qf::beam_quador({"a", {0, 0, 0}, 1}, {"b", {4, 0, 0}, 2}, 4);
  EXPECT_NEAR(*qf::beam_radius(asym, 0), std::sqrt(73.0) / 8, 1e-12);
  EXPECT_NEAR(*qf::beam_radius(asym, 4), std::sqrt(4.140625), 1e-12);
}

TEST(BeamRadius, PointsLieOnTheQuador) {
  qf_test::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto c = qf_test::random_beam(rng);
    const auto g = qf::beam_quador(c.a, c.b, c.k);
    const double s = rng.uniform(0, g.length());
    const auto rho = qf::beam_radius(g, s);
    if (!rho) continue;
    const Vec3 w = qf::normalized(qf::cross(g.axis, rng.unit()));
    const Vec3 p = g.center_a + s * g.axis + *rho * w;
    EXPECT_LE(std::abs(g.H(p)), 1e-10 * std::max(1.0, qf::residual_scale(g.H, p)));
  }
}

TEST(StubViews, PerpendicularHub) {
  const auto views = qf::stub_views_at_hub(two_beam(), "h0");
  ASSERT_EQ(views.size(), 2u);
  EXPECT_EQ(views[0].G.g, (Vec3{1, 0, 0}));
  EXPECT_EQ(views[0].G.c0, 0.0);
  EXPECT_EQ(views[1].G.g, (Vec3{0, 1, 0}));
  EXPECT_EQ(views[1].G.c0, 0.0);
  for (const auto& v : views)
    EXPECT_EQ(v.H, qf::subtract_square(qf::sphere_quadric({"h0", {0, 0, 0}, 1}), v.G));
}

TEST(StubViews, FarEndIsNormalizedTowardTheOtherHub) {
  const auto views = qf::stub_views_at_hub(two_beam(), "h1");
  ASSERT_EQ(views.size(), 1u);
  EXPECT_GT(views[0].G({0, 0, 0}), 0.0);
  EXPECT_EQ(views[0].axis, (Vec3{-1, 0, 0}));
}

TEST(StubViews, EmptyAndUnknown) {
  Lattice l = two_beam();
  l.hubs.push_back({"lonely", {10, 10, 10}, 1});
  EXPECT_TRUE(qf::stub_views_at_hub(l, "lonely").empty());
  EXPECT_EQ(code_of([&] { qf::stub_views_at_hub(l, "nope"); }), qf::ErrorCode::UnknownHub);
}

TEST(Validate, CleanFixture) {
  const auto report = qf::validate_lattice(two_beam());
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.error_count(), 0u);
  EXPECT_EQ(report.warning_count(), 0u);
}

TEST(Validate, ErrorEntries) {
  Lattice k0 = two_beam();
  k0.beams[0].k = 0;
  EXPECT_TRUE(qf::validate_lattice(k0).has("DEGENERATE_K"));

  Lattice mismatch = two_beam();
  mismatch.fillets[0].hub = "h1";
  EXPECT_TRUE(qf::validate_lattice(mismatch).has("FILLET_PAIR_MISMATCH"));

  Lattice dup = two_beam();
  dup.hubs[1].id = "h0";
  EXPECT_TRUE(qf::validate_lattice(dup).has("DUPLICATE_ID"));

  Lattice radius = two_beam();
  radius.hubs[2].radius = -1;
  const auto r = qf::validate_lattice(radius);
  EXPECT_TRUE(r.has("NON_POSITIVE_RADIUS"));
  EXPECT_FALSE(r.ok());

  Lattice missing = two_beam();
  missing.beams[1].hub_b = "ghost";
  EXPECT_TRUE(qf::validate_lattice(missing).has("UNKNOWN_HUB"));

  Lattice misses = two_beam();
  misses.beams[0].k = 0.5;
  EXPECT_TRUE(qf::validate_lattice(misses).has("PLANE_MISSES_SPHERE"));

  Lattice beta = two_beam();
  beta.fillets[0].beta = 0;
  EXPECT_TRUE(qf::validate_lattice(beta).has("NON_POSITIVE_BETA"));
}

TEST(Validate, OverlapIsAWarning) {
  Lattice l = two_beam();
  l.hubs.push_back({"h3", {0.5, 0, 3}, 1});
  l.hubs.push_back({"h4", {0.5, 0.5, 3}, 1});
  const auto r = qf::validate_lattice(l);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.has("HUB_OVERLAP"));
}

TEST(Validate, WedgeOverlapWarningAtBusyHub) {
  Lattice l = two_beam();
  l.hubs.push_back({"h3", {2.828, 2.828, 0}, 1});
  l.beams.push_back({"b2", "h0", "h3", 4});
  l.fillets = {{"h0", "b0", "b2", 1.0}, {"h0", "b2", "b1", 1.0}};
  const auto r = qf::validate_lattice(l);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.has("FILLET_WEDGE_OVERLAP"));
}
