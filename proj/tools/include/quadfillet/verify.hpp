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

#include <cstdint>
#include <string>
#include <vector>

#include "quadfillet/lattice.hpp"

namespace quadfillet::cli {

struct VerifyOptions {
  double tol = 1e-9;       // surface-membership tolerance, relative to residual_scale
  int samples = 10000;     // random points for the material check
  std::uint64_t seed = 0;
  bool inject_identity_fault = false;  // test hook: perturbs each fillet's Q
};

enum class CheckStatus { Pass, Fail, Warn };
std::string to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  int count(CheckStatus status) const;
  int exit_code() const;  // 0 when nothing failed, 3 otherwise
  std::string to_json() const;
};

// The lattice must pass validation.
VerifyReport run_verify(const Lattice& lattice, const VerifyOptions& options);

}  // namespace quadfillet::cli
