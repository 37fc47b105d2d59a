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

struct SymmetricEigen {
  std::array<double, 3> values;  // sorted descending
  Mat3 vectors;                  // columns are the matching unit eigenvectors
};

// Cyclic Jacobi rotations on a symmetric 3x3 matrix. Stops when the
// off-diagonal norm drops below 1e-14 * |A|_F or after 30 sweeps.
//
// Output is deterministic: eigenvalues sorted descending (stable with respect
// to the input diagonal order), the first two eigenvectors sign-fixed so their
// largest-magnitude component is positive, and the third taken as their cross
// product so the frame is right-handed.
SymmetricEigen jacobi_eigen3(const Mat3& a);

}  // namespace quadfillet
