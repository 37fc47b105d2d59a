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
#include <cstdint>
#include <functional>
#include <vector>

#include "quadfillet/solid.hpp"
#include "quadfillet/vec3.hpp"

namespace quadfillet {

using Triangle = std::array<std::uint32_t, 3>;

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<Triangle> triangles;
};

// Cells per axis.
struct Resolution {
  int nx = 64;
  int ny = 64;
  int nz = 64;
};

using ScalarField = std::function<double(const Vec3&)>;

// Polygonizes {f = 0} over the box. Inside is f < 0; triangle winding gives
// normals toward increasing f. Vertices on shared grid edges are welded.
// The field must be safe to call from several threads.
// Throws Error(DegenerateBounds) for an empty box or a resolution below 2.
Mesh marching_cubes(const ScalarField& f, const Box& bounds, const Resolution& res);
Mesh marching_cubes(const Assembly& assembly, const Box& bounds, const Resolution& res);

Vec3 triangle_normal(const Mesh& mesh, const Triangle& t);  // unnormalized, |n| = 2 * area
double triangle_area(const Mesh& mesh, const Triangle& t);

// Every undirected edge is shared by exactly two triangles, traversed in
// opposite directions.
bool is_closed_manifold(const Mesh& mesh);

// Counts triangles whose area is at most eps.
std::size_t count_degenerate(const Mesh& mesh, double eps);

}  // namespace quadfillet
