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

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Each check measures the quantity, compares it against its pinned
// tolerance and prints the measurement.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "poly_oracle.hpp"
#include "quadfillet/error.hpp"
#include "quadfillet/fillet.hpp"
#include "quadfillet/io.hpp"
#include "quadfillet/mesh.hpp"
#include "quadfillet/solid.hpp"
#include "test_support.hpp"

namespace qf = quadfillet;
namespace fs = std::filesystem;
using qf::Quadric;
using qf::Vec3;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures and measurements for one criterion.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& text) { notes_.push_back(text); }

  Outcome outcome() const {
    Outcome o{failed_ == 0, ""};
    std::ostringstream s;
    for (std::size_t i = 0; i < notes_.size(); ++i) s << (i ? ", " : "") << notes_[i];
    for (const auto& f : failures_) s << "; " << f;
    if (failed_ > static_cast<int>(failures_.size())) s << "; (" << failed_ << " failures)";
    o.detail = s.str();
    return o;
  }

 private:
  std::vector<std::string> notes_;
  std::vector<std::string> failures_;
  int failed_ = 0;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(qf::norm(qf::cross(a, b)), qf::dot(a, b));
}

std::vector<std::string> fixtures() {
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(QF_DATA_DIR))
    if (entry.path().extension() == ".json") out.push_back(entry.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

qf::FilletPatch perpendicular_fillet(double beta) {
  const auto l = qf::load_lattice_file(qf_test::data_path("two_beam_plain.json"));
  return qf::build_fillet(qf::stub_view(l, "h0", "b0"), qf::stub_view(l, "h0", "b1"), beta);
}

// Surface residual and gradient-angle check of a patch along one conic.
void check_conic_tangency(Check& c, const qf::Conic& conic, const qf::Quadric& Q, const qf::Quadric& H,
                          int n, double& worst_residual, double& worst_angle) {
  for (const Vec3& x : qf::sample_conic(conic, n)) {
    const double rq = std::abs(Q(x)) / std::max(1.0, qf::residual_scale(Q, x));
    const double rh = std::abs(H(x)) / std::max(1.0, qf::residual_scale(H, x));
    worst_residual = std::max({worst_residual, rq, rh});
    c.require(rq <= 1e-10 && rh <= 1e-10, "residual " + sci(std::max(rq, rh)));
    const Vec3 gh = qf::gradient(H, x);
    if (qf::norm(gh) == 0.0) continue;
    const double ang = angle_between(qf::gradient(Q, x), gh);
    worst_angle = std::max(worst_angle, ang);
    c.require(ang <= 1e-7, "angle " + sci(ang));
  }
}

std::vector<qf_test::StubPair> random_configurations() {
  qf_test::Rng rng(20260101);
  std::vector<qf_test::StubPair> out;
  for (int i = 0; i < 200; ++i) out.push_back(qf_test::random_stub_pair(rng));
  return out;
}

Outcome ac1(double& seconds) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& cfg : random_configurations()) {
    const auto planes = qf::fillet_planes(cfg.s1.G, cfg.s2.G, cfg.beta);
    const Quadric q1 = qf::subtract_square(cfg.s1.H, planes.E1);
    const Quadric q2 = qf::subtract_square(cfg.s2.H, planes.E2);
    worst = std::max(worst, qf::relative_coefficient_deviation(q1, q2));
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(worst <= 1e-12, "deviation over 1e-12");
  c.require(seconds < 1.0, "runtime over 1 s");
  c.note("200 configurations, max relative deviation " + sci(worst) + " (tol 1e-12)");
  return c.outcome();
}

Outcome ac2() {
  Check c;
  double worst = 0.0;
  for (const auto& cfg : random_configurations())
    for (double t : {0.5, 0.9, 1.5, 3.0}) {
      const double alpha = t / (4 * cfg.beta);
      const auto planes = qf::fillet_planes_unconstrained(cfg.s1.G, cfg.s2.G, alpha, cfg.beta);
      const Quadric r = qf::fillet_residual(cfg.s1.H, cfg.s2.H, planes.E1, planes.E2);
      const Quadric expected = (1 - 4 * alpha * cfg.beta) * qf::product(planes.F_plus, planes.F_minus);
      worst = std::max(worst, qf::relative_coefficient_deviation(r, expected));
    }
  c.require(worst <= 1e-12, "deviation over 1e-12");
  c.note("800 (alpha, beta) pairs, max relative deviation " + sci(worst) + " (tol 1e-12)");
  return c.outcome();
}

// 32 points on the circle {G = 0} on the hub sphere.
std::vector<Vec3> tangency_circle(const qf::StubView& s, int n) {
  const double g2 = qf::dot(s.G.g, s.G.g);
  const Vec3 foot = s.hub_center - (s.G(s.hub_center) / g2) * s.G.g;
  const double d2 = qf::dot(foot - s.hub_center, foot - s.hub_center);
  const double rho = std::sqrt(std::max(0.0, s.hub_radius * s.hub_radius - d2));
  const Vec3 n0 = s.G.g / std::sqrt(g2);
  const Vec3 seed = std::abs(n0.x) < 0.6 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 u = qf::normalized(qf::cross(n0, seed));
  const Vec3 v = qf::cross(n0, u);
  std::vector<Vec3> pts;
  for (int i = 0; i < n; ++i) {
    const double t = 2 * M_PI * i / n;
    pts.push_back(foot + rho * (std::cos(t) * u + std::sin(t) * v));
  }
  return pts;
}

double stub_tangency(Check& c, const qf::Lattice& l) {
  double worst = 0.0;
  for (const auto& beam : l.beams)
    for (const auto& hub : {beam.hub_a, beam.hub_b}) {
      const qf::StubView s = qf::stub_view(l, hub, beam.id);
      const Quadric S = qf::sphere_quadric(*l.find_hub(hub));
      for (const Vec3& x : tangency_circle(s, 32)) {
        const Vec3 gs = qf::gradient(S, x);
        const double d = qf::norm(qf::gradient(s.H, x) - gs) / qf::norm(gs);
        worst = std::max(worst, d);
        c.require(d <= 1e-12, beam.id + "@" + hub + " gradient gap " + sci(d));
      }
    }
  return worst;
}

Outcome ac3() {
  Check c;
  double worst = 0.0;
  int stubs = 0;
  for (const auto& path : fixtures()) {
    const auto l = qf::load_lattice_file(path);
    worst = std::max(worst, stub_tangency(c, l));
    stubs += 2 * static_cast<int>(l.beams.size());
  }
  c.note(std::to_string(stubs) + " stubs x 32 points, max |grad H - grad S|/|grad S| " + sci(worst) +
         " (tol 1e-12)");
  return c.outcome();
}

Outcome ac4() {
  Check c;
  double residual = 0.0, angle = 0.0;
  int patches = 0;
  for (const auto& path : fixtures()) {
    const auto a = qf::build_assembly(qf::load_lattice_file(path));
    for (const auto& f : a.fillets) {
      ++patches;
      check_conic_tangency(c, f.patch.conic1, f.patch.Q, f.patch.stub1.H, 32, residual, angle);
      check_conic_tangency(c, f.patch.conic2, f.patch.Q, f.patch.stub2.H, 32, residual, angle);
    }
  }
  c.require(patches > 0, "no fillet patches in fixtures");
  c.note(std::to_string(patches) + " patches, max residual " + sci(residual) + " (tol 1e-10), max angle " +
         sci(angle) + " rad (tol 1e-7)");
  return c.outcome();
}

Outcome ac5() {
  Check c;
  const auto l = qf::load_lattice_file(qf_test::data_path("asymmetric_beam.json"));
  const auto g = qf::beam_quador(*l.find_hub("h0"), *l.find_hub("h1"), l.beams.at(0).k);
  using qf_test::Poly;
  const Quadric expected =
      (Poly::y() * Poly::y() + Poly::z() * Poly::z() - qf_test::frac(3, 4) * Poly::x() - qf_test::frac(73, 64))
          .to_quadric();
  const double dev = qf::relative_coefficient_deviation(g.H, expected);
  c.require(dev <= 1e-12, "H deviates by " + sci(dev));
  Check t;
  const double gap = stub_tangency(t, l);
  c.require(t.outcome().pass, "tangency: " + t.outcome().detail);
  double on_circle = 0.0;
  for (const auto& hub : {"h0", "h1"})
    for (const Vec3& x : tangency_circle(qf::stub_view(l, hub, "b0"), 32)) on_circle = std::max(on_circle, std::abs(g.H(x)));
  c.require(on_circle <= 1e-12, "H off the tangency circle by " + sci(on_circle));
  c.note("H = y^2+z^2-0.75x-73/64 to " + sci(dev) + " (tol 1e-12), gradient gap " + sci(gap) +
         ", |H| on circles " + sci(on_circle));
  return c.outcome();
}

Outcome ac6() {
  Check c;
  double previous = std::numeric_limits<double>::infinity();
  double residual = 0.0, angle = 0.0, identity = 0.0;
  std::string extents;
  for (double beta : {0.6, 0.8, 1.0, 1.25, 1.5}) {
    const auto p = perpendicular_fillet(beta);
    identity = std::max(identity, qf::identity_deviation(p));
    check_conic_tangency(c, p.conic1, p.Q, p.stub1.H, 32, residual, angle);
    check_conic_tangency(c, p.conic2, p.Q, p.stub2.H, 32, residual, angle);
    c.require(p.extent.has_value(), "unbounded extent at beta " + sci(beta));
    const double e = p.extent.value_or(0.0);
    c.require(e < previous, "extent not strictly decreasing at beta " + sci(beta));
    extents += (extents.empty() ? "" : "/") + sci(e);
    previous = e;
  }
  c.require(identity <= 1e-12, "identity deviation " + sci(identity));
  const double e1 = perpendicular_fillet(1.0).extent.value_or(0.0);
  const double e2 = perpendicular_fillet(2.0).extent.value_or(0.0);
  c.require(std::abs(e1 - std::sqrt(34.0) / 3) <= 1e-6, "extent(1) = " + sci(e1));
  c.require(std::abs(e2 - std::sqrt(514.0) / 15) <= 1e-6, "extent(2) = " + sci(e2));

  const auto p1 = perpendicular_fillet(1.0);
  const double r = qf::fillet_min_curvature_radius(p1);
  const double s = std::sqrt(4.0 / 3.0);
  const auto fd = qf_test::fd_principal_curvatures(p1.Q, {s, s, 0});
  const double r_fd = 1.0 / std::max(std::abs(fd[0]), std::abs(fd[1]));
  c.require(std::abs(r - 0.4082) <= 1e-3, "curvature radius " + sci(r));
  c.require(std::abs(r - r_fd) <= 1e-3, "finite-difference radius " + sci(r_fd));
  char buf[160];
  std::snprintf(buf, sizeof buf, "extent(1) %.9f, extent(2) %.9f, radius(1) %.6f (fd %.6f)", e1, e2, r, r_fd);
  c.note("extents " + extents + " strictly decreasing");
  c.note(buf);
  return c.outcome();
}

Outcome ac7(double& seconds) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto filleted = qf::build_assembly(qf::load_lattice_file(qf_test::data_path("two_beam_beta1.json")));
  const auto plain = qf::build_assembly(qf::load_lattice_file(qf_test::data_path("two_beam_plain.json")));
  const qf::Box box = qf::auto_bounds(filleted);
  qf_test::Rng rng(7);
  int lost = 0, gained = 0;
  for (int i = 0; i < 10000; ++i) {
    const Vec3 x{rng.uniform(box.lo.x, box.hi.x), rng.uniform(box.lo.y, box.hi.y), rng.uniform(box.lo.z, box.hi.z)};
    const bool before = qf::field_value(plain, x) < 0;
    const bool after = qf::field_value(filleted, x) < 0;
    if (before && !after) ++lost;
    if (!before && after) ++gained;
  }
  const Vec3 probe{1.05, 1.05, 0};
  const bool flips = qf::field_value(plain, probe) > 0 && qf::field_value(filleted, probe) < 0;
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(lost == 0, std::to_string(lost) + " points lost material");
  c.require(gained > 0, "no sampled point gained material");
  c.require(flips, "(1.05, 1.05, 0) does not flip");
  c.require(seconds < 2.0, "runtime over 2 s");
  c.note("10000 points, " + std::to_string(lost) + " lost, " + std::to_string(gained) +
         " gained, (1.05,1.05,0) flips");
  return c.outcome();
}

Outcome ac8() {
  Check c;
  const auto p = qf::build_assembly(qf::load_lattice_file(qf_test::data_path("two_beam_chamfer.json"))).fillets.at(0).patch;
  using qf_test::Poly;
  const Quadric expected = (Poly::z() * Poly::z() - 1).to_quadric();
  const double dev = qf::relative_coefficient_deviation(p.Q, expected);
  c.require(dev <= 1e-12, "Q deviates from z^2-1 by " + sci(dev));
  c.require(p.kind == qf::QuadricKind::ParallelPlanes, "class " + std::string(qf::to_string(p.kind)));
  c.require(p.conic1.kind == qf::ConicKind::ParallelLines && p.conic2.kind == qf::ConicKind::ParallelLines,
            "conics " + std::string(qf::to_string(p.conic1.kind)) + "/" + std::string(qf::to_string(p.conic2.kind)));
  c.note("Q = z^2-1 to " + sci(dev) + ", " + std::string(qf::to_string(p.kind)) + ", conics " +
         std::string(qf::to_string(p.conic1.kind)) + " and " + std::string(qf::to_string(p.conic2.kind)));
  return c.outcome();
}

// Fraction of triangles whose normal agrees with the field gradient at the
// centroid, and the enclosed signed volume.
void orientation(const qf::Mesh& m, const std::function<Vec3(const Vec3&)>& grad, double& agree, double& volume) {
  int good = 0;
  volume = 0.0;
  for (const auto& t : m.triangles) {
    const Vec3 a = m.vertices[t[0]], b = m.vertices[t[1]], cc = m.vertices[t[2]];
    volume += qf::dot(a, qf::cross(b, cc)) / 6.0;
    if (qf::dot(qf::triangle_normal(m, t), grad((a + b + cc) / 3.0)) > 0) ++good;
  }
  agree = m.triangles.empty() ? 0.0 : static_cast<double>(good) / m.triangles.size();
}

Outcome ac9(double& seconds) {
  Check c;
  const auto sphere = qf::build_assembly(qf::load_lattice_file(qf_test::data_path("single_hub.json")));
  const qf::Mesh ms = qf::marching_cubes(sphere, qf::auto_bounds(sphere), {64, 64, 64});
  double worst = 0.0;
  for (const Vec3& v : ms.vertices) worst = std::max(worst, std::abs(qf::dot(v, v) - 1.0));
  c.require(qf::is_closed_manifold(ms), "sphere mesh not watertight");
  c.require(worst <= 0.01, "sphere vertex |S| " + sci(worst));

  const auto t0 = std::chrono::steady_clock::now();
  const auto a = qf::build_assembly(qf::load_lattice_file(qf_test::data_path("two_beam_beta1.json")));
  const qf::Mesh mf = qf::marching_cubes(a, qf::auto_bounds(a), {96, 96, 96});
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double agree = 0.0, volume = 0.0;
  orientation(mf, [&](const Vec3& x) { return qf::evaluate_field(a, x).gradient; }, agree, volume);
  c.require(qf::is_closed_manifold(mf), "fillet mesh not watertight");
  c.require(volume > 0, "fillet mesh encloses negative volume");
  c.require(agree >= 0.99, "only " + sci(agree) + " of normals point outward");
  c.require(seconds < 10.0, "runtime over 10 s");
  c.note("sphere " + std::to_string(ms.triangles.size()) + " triangles, max |S| " + sci(worst) + " (tol 0.01)");
  c.note("fillet fixture " + std::to_string(mf.triangles.size()) + " triangles, watertight, volume " + sci(volume) +
         ", outward " + sci(100 * agree) + "%");
  return c.outcome();
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome ac10(double& seconds) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const fs::path dir = fs::temp_directory_path() / "qfillet_acceptance";
  fs::create_directories(dir);
  const std::string bin = QF_CLI_PATH;
  const std::string beta1 = qf_test::data_path("two_beam_beta1.json");
  const std::string plain = qf_test::data_path("two_beam_plain.json");

  const std::string report = (dir / "report.json").string();
  const int verify = shell(bin + " verify " + beta1 + " --report " + report + " > /dev/null");
  c.require(verify == 0, "verify exit " + std::to_string(verify));
  try {
    const auto j = nlohmann::json::parse(qf::read_file(report));
    c.require(j.at("summary").at("fail") == 0, "verify report lists failures");
  } catch (const std::exception& e) {
    c.require(false, std::string("report unreadable: ") + e.what());
  }

  const std::string stl = (dir / "m.stl").string();
  const int mesh = shell(bin + " mesh " + beta1 + " --resolution 64 -o " + stl + " > /dev/null");
  c.require(mesh == 0, "mesh exit " + std::to_string(mesh));
  std::size_t triangles = 0;
  try {
    const std::string bytes = qf::read_file(stl);
    triangles = qf::parse_stl(bytes).triangles.size();
    c.require(triangles > 0 && bytes.size() == 84 + 50 * triangles, "STL size " + std::to_string(bytes.size()));
  } catch (const std::exception& e) {
    c.require(false, std::string("STL unreadable: ") + e.what());
  }

  // Each tabulated point is checked on the fixture it describes: the stub
  // value at (0.9, 0.9, 0.3) holds without the fillet, which otherwise
  // dominates there.
  const std::string pts = (dir / "pts.csv").string();
  qf::write_file(pts, "x,y,z\n0.9,0.9,0.3\n1.05,1.05,0\n3,3,0\n");
  const std::string out1 = (dir / "s1.csv").string(), out2 = (dir / "s2.csv").string();
  const int s1 = shell(bin + " sample " + beta1 + " --points " + pts + " -o " + out1);
  const int s2 = shell(bin + " sample " + plain + " --points " + pts + " -o " + out2);
  c.require(s1 == 0 && s2 == 0, "sample exit codes " + std::to_string(s1) + "/" + std::to_string(s2));
  try {
    const std::string a = qf::read_file(out1), b = qf::read_file(out2);
    c.require(b.find("\n0.9,0.9,0.3,-0.1,inside,BEAM(b0)\n") != std::string::npos, "(0.9,0.9,0.3) unfilleted");
    c.require(a.find("\n1.05,1.05,0,-0.173125,inside,FILLET(h0;b0;b1)\n") != std::string::npos, "(1.05,1.05,0)");
    c.require(b.find("\n1.05,1.05,0,0.1025,outside,OUTSIDE\n") != std::string::npos, "(1.05,1.05,0) unfilleted");
    c.require(a.find("\n3,3,0,5.75,outside,OUTSIDE\n") != std::string::npos, "(3,3,0)");
  } catch (const std::exception& e) {
    c.require(false, std::string("sample output unreadable: ") + e.what());
  }
  fs::remove_all(dir);
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.note("verify exit " + std::to_string(verify) + ", STL " + std::to_string(triangles) +
         " triangles = 84 + 50n bytes, sample rows match");
  return c.outcome();
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int n, const std::string& name, const std::function<Outcome(double&)>& fn) {
    double seconds = -1.0;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = fn(seconds);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (seconds < 0) seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    char time[32];
    std::snprintf(time, sizeof time, "%.3f s", seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << " AC" << n << " " << name << ": " << o.detail << " [" << time
              << "]\n";
  };
  auto timed = [](Outcome (*f)()) { return [f](double&) { return f(); }; };
  report(1, "fillet identity", ac1);
  report(2, "residual law", timed(ac2));
  report(3, "sphere-stub tangency", timed(ac3));
  report(4, "fillet tangency", timed(ac4));
  report(5, "two-sphere beam", timed(ac5));
  report(6, "fan and monotonicity", timed(ac6));
  report(7, "material monotonicity", ac7);
  report(8, "degenerate chamfer", timed(ac8));
  report(9, "meshing", ac9);
  report(10, "cli end-to-end", ac10);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
