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

#include <stdexcept>
#include <string>
#include <utility>
#include <string_view>

namespace quadfillet {

enum class ErrorCode {
  AllZero,
  SingularPoint,
  UnsupportedClass,
  DegenerateK,
  PlaneMissesSphere,
  UnknownHub,
  UnknownBeam,
  ParallelStubs,
  IdentityViolation,
  WedgeOrientation,
  EmptyConic,
  NoBisectorIntersection,
  ZeroGradient,
  NotACurve,
  PointOffSurface,
  InvalidArgument,
  DegenerateBounds,
  ValidationError,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` carries the failure kind.
// `detail()` is a machine-usable subject (hub id, JSON pointer, row number)
// and defaults to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message) : Error(code, message, message) {}
  Error(ErrorCode code, const std::string& message, std::string detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace quadfillet
