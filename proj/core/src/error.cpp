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

#include "quadfillet/error.hpp"

namespace quadfillet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AllZero: return "ALL_ZERO";
    case ErrorCode::SingularPoint: return "SINGULAR_POINT";
    case ErrorCode::UnsupportedClass: return "UNSUPPORTED_CLASS";
    case ErrorCode::DegenerateK: return "DEGENERATE_K";
    case ErrorCode::PlaneMissesSphere: return "PLANE_MISSES_SPHERE";
    case ErrorCode::UnknownHub: return "UNKNOWN_HUB";
    case ErrorCode::UnknownBeam: return "UNKNOWN_BEAM";
    case ErrorCode::ParallelStubs: return "PARALLEL_STUBS";
    case ErrorCode::IdentityViolation: return "IDENTITY_VIOLATION";
    case ErrorCode::WedgeOrientation: return "WEDGE_ORIENTATION";
    case ErrorCode::EmptyConic: return "EMPTY_CONIC";
    case ErrorCode::NoBisectorIntersection: return "NO_BISECTOR_INTERSECTION";
    case ErrorCode::ZeroGradient: return "ZERO_GRADIENT";
    case ErrorCode::NotACurve: return "NOT_A_CURVE";
    case ErrorCode::PointOffSurface: return "POINT_OFF_SURFACE";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::DegenerateBounds: return "DEGENERATE_BOUNDS";
    case ErrorCode::ValidationError: return "VALIDATION_ERROR";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace quadfillet
