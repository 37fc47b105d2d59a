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

#include "quadfillet/forms.hpp"

namespace quadfillet {

struct PrincipalCurvatures {
  double k1 = 0.0;  // |k1| >= |k2|
  double k2 = 0.0;
};

// Principal curvatures of the level set of Q through x, with the normal
// oriented along +grad Q (so a sphere |x|^2 - r^2 has curvature +1/r).
// Throws Error(SingularPoint) when |grad Q| is negligible at x.
PrincipalCurvatures principal_curvatures(const Quadric& q, const Vec3& x);

}  // namespace quadfillet
