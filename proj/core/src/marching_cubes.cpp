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

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>
#include <tuple>
#include <utility>

#include "quadfillet/error.hpp"
#include "quadfillet/mesh.hpp"

namespace quadfillet {
namespace {

// v0..v7: counter-clockwise on the bottom face, then the top face.
constexpr std::array<std::array<int, 3>, 8> kCorner = {{
    {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}}};

constexpr std::array<std::array<int, 2>, 12> kEdge = {{
    {0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}};

// Faces listed counter-clockwise about their outward normal.
constexpr std::array<std::array<int, 4>, 6> kFace = {{
    {0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {3, 7, 6, 2}, {0, 4, 7, 3}, {1, 2, 6, 5}}};

using EdgeTriangle = std::array<int, 3>;
using CaseTable = std::array<std::vector<EdgeTriangle>, 256>;

int edge_between(int a, int b) {
  for (int e = 0; e < 12; ++e)
    if ((kEdge[e][0] == a && kEdge[e][1] == b) || (kEdge[e][0] == b && kEdge[e][1] == a)) return e;
  return -1;
}

// On each face, walking counter-clockwise, a contour segment runs from an
// outside-to-inside crossing to the next inside-to-outside crossing. This
// cuts off inside corners on ambiguous faces, and neighbouring cells see
// the same segment reversed, so the surface closes up. The segments chain
// into loops around the inside region; fanning them gives triangles whose
// normals point toward the outside.
CaseTable build_case_table() {
  CaseTable table;
  for (int mask = 0; mask < 256; ++mask) {
    auto inside = [mask](int c) { return (mask >> c & 1) != 0; };
    std::array<int, 12> next;
    next.fill(-1);
    for (const auto& face : kFace) {
      std::array<std::pair<int, bool>, 4> crossings;  // (edge, entering)
      int n = 0;
      for (int i = 0; i < 4; ++i) {
        const int a = face[i];
        const int b = face[(i + 1) % 4];
        if (inside(a) != inside(b)) crossings[n++] = {edge_between(a, b), inside(b)};
      }
      for (int i = 0; i < n; ++i) {
        if (!crossings[i].second) continue;
        next[crossings[i].first] = crossings[(i + 1) % n].first;
      }
    }
    std::array<bool, 12> used{};
    for (int start = 0; start < 12; ++start) {
      if (next[start] < 0 || used[start]) continue;
      std::vector<int> loop;
      for (int e = start; !used[e]; e = next[e]) {
        used[e] = true;
        loop.push_back(e);
      }
      for (std::size_t i = 1; i + 1 < loop.size(); ++i)
        table[mask].push_back({loop[0], loop[i], loop[i + 1]});
    }
  }
  return table;
}

const CaseTable& case_table() {
  static const CaseTable table = build_case_table();
  return table;
}

constexpr std::uint32_t kUnset = 0xffffffffu;

class Polygonizer {
 public:
  Polygonizer(const ScalarField& f, const Box& box, const Resolution& res)
      : f_(f), box_(box), res_(res), row_(res.nx + 1), plane_size_(row_ * (res.ny + 1)) {
    for (auto& v : values_) v.resize(plane_size_);
    for (auto& c : xedge_) c.resize(plane_size_);
    for (auto& c : yedge_) c.resize(plane_size_);
    zedge_.resize(plane_size_);
  }

  Mesh run() {
    sample_plane(0, values_[0]);
    reset_plane(0);
    for (int k = 0; k < res_.nz; ++k) {
      sample_plane(k + 1, values_[1]);
      reset_plane(1);
      std::fill(zedge_.begin(), zedge_.end(), kUnset);
      for (int j = 0; j < res_.ny; ++j)
        for (int i = 0; i < res_.nx; ++i) polygonize_cell(i, j, k);
      std::swap(values_[0], values_[1]);
      std::swap(xedge_[0], xedge_[1]);
      std::swap(yedge_[0], yedge_[1]);
    }
    return std::move(mesh_);
  }

 private:
  Vec3 grid_point(int i, int j, int k) const {
    const Vec3 d = box_.size();
    return {box_.lo.x + d.x * i / res_.nx, box_.lo.y + d.y * j / res_.ny,
            box_.lo.z + d.z * k / res_.nz};
  }

  void sample_plane(int k, std::vector<double>& out) const {
    const int rows = res_.ny + 1;
    const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, rows);
    auto work = [&](int first, int last) {
      for (int j = first; j < last; ++j)
        for (int i = 0; i < row_; ++i) out[j * row_ + i] = f_(grid_point(i, j, k));
    };
    if (workers == 1) {
      work(0, rows);
      return;
    }
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
      threads.emplace_back(work, rows * w / workers, rows * (w + 1) / workers);
    for (auto& t : threads) t.join();
  }

  void reset_plane(int p) {
    std::fill(xedge_[p].begin(), xedge_[p].end(), kUnset);
    std::fill(yedge_[p].begin(), yedge_[p].end(), kUnset);
  }

  double value(int i, int j, int dz) const { return values_[dz][j * row_ + i]; }

  std::uint32_t vertex_on(std::uint32_t& slot, const Vec3& pa, double fa, const Vec3& pb, double fb) {
    if (slot != kUnset) return slot;
    double t = fa / (fa - fb);
    if (!std::isfinite(t)) t = 0.5;
    t = std::clamp(t, 1e-7, 1.0 - 1e-7);
    slot = static_cast<std::uint32_t>(mesh_.vertices.size());
    mesh_.vertices.push_back(pa + t * (pb - pa));
    return slot;
  }

  // Vertex for a cell edge; the slot is keyed by the grid edge so adjacent
  // cells share it.
  std::uint32_t edge_vertex(int e, int i, int j, int k) {
    const auto& ca = kCorner[kEdge[e][0]];
    const auto& cb = kCorner[kEdge[e][1]];
    int ai = i + ca[0], aj = j + ca[1], az = ca[2];
    int bi = i + cb[0], bj = j + cb[1], bz = cb[2];
    if (std::tie(az, aj, ai) > std::tie(bz, bj, bi)) {
      std::swap(ai, bi);
      std::swap(aj, bj);
      std::swap(az, bz);
    }
    std::uint32_t* slot;
    if (az != bz) slot = &zedge_[aj * row_ + ai];
    else if (aj != bj) slot = &yedge_[az][aj * row_ + ai];
    else slot = &xedge_[az][aj * row_ + ai];
    return vertex_on(*slot, grid_point(ai, aj, k + az), value(ai, aj, az),
                     grid_point(bi, bj, k + bz), value(bi, bj, bz));
  }

  void polygonize_cell(int i, int j, int k) {
    int mask = 0;
    for (int c = 0; c < 8; ++c)
      if (value(i + kCorner[c][0], j + kCorner[c][1], kCorner[c][2]) < 0.0) mask |= 1 << c;
    for (const EdgeTriangle& t : case_table()[mask])
      mesh_.triangles.push_back(
          {edge_vertex(t[0], i, j, k), edge_vertex(t[1], i, j, k), edge_vertex(t[2], i, j, k)});
  }

  const ScalarField& f_;
  Box box_;
  Resolution res_;
  int row_;
  int plane_size_;
  std::array<std::vector<double>, 2> values_;
  std::array<std::vector<std::uint32_t>, 2> xedge_;
  std::array<std::vector<std::uint32_t>, 2> yedge_;
  std::vector<std::uint32_t> zedge_;
  Mesh mesh_;
};

}  // namespace

Mesh marching_cubes(const ScalarField& f, const Box& bounds, const Resolution& res) {
  const Vec3 d = bounds.size();
  if (res.nx < 2 || res.ny < 2 || res.nz < 2)
    throw Error(ErrorCode::DegenerateBounds, "resolution must be at least 2 on every axis");
  if (!is_finite(bounds.lo) || !is_finite(bounds.hi) || !(d.x > 0.0 && d.y > 0.0 && d.z > 0.0))
    throw Error(ErrorCode::DegenerateBounds, "bounding box is empty or not finite");
  return Polygonizer(f, bounds, res).run();
}

Mesh marching_cubes(const Assembly& assembly, const Box& bounds, const Resolution& res) {
  return marching_cubes([&assembly](const Vec3& x) { return field_value(assembly, x); }, bounds, res);
}

Vec3 triangle_normal(const Mesh& mesh, const Triangle& t) {
  const Vec3& a = mesh.vertices[t[0]];
  return cross(mesh.vertices[t[1]] - a, mesh.vertices[t[2]] - a);
}

double triangle_area(const Mesh& mesh, const Triangle& t) { return 0.5 * norm(triangle_normal(mesh, t)); }

bool is_closed_manifold(const Mesh& mesh) {
  // Directed edge counts; a closed, consistently oriented surface uses each
  // directed edge once and its reverse once.
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> directed;
  for (const Triangle& t : mesh.triangles)
    for (int i = 0; i < 3; ++i) ++directed[{t[i], t[(i + 1) % 3]}];
  for (const auto& [edge, count] : directed) {
    if (count != 1) return false;
    const auto it = directed.find({edge.second, edge.first});
    if (it == directed.end() || it->second != 1) return false;
  }
  return true;
}

std::size_t count_degenerate(const Mesh& mesh, double eps) {
  return static_cast<std::size_t>(std::count_if(mesh.triangles.begin(), mesh.triangles.end(),
                                                [&](const Triangle& t) { return triangle_area(mesh, t) <= eps; }));
}

}  // namespace quadfillet
