// Copyright 2026 The fgqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Invariant suite behind `fgqc validate`.

#include "fgqc/propagate.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fgqc {

/// Deliberate faults for checking that the suite reports failures.
enum class Injection { None, LargeDt, NonHermitian };

Injection parse_injection(const std::string& s);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidateOptions {
  Injection inject = Injection::None;
  IntegratorConfig cfg{};
};

/// Runs every check; each failure or exception is recorded, never rethrown.
/// `progress` (optional) is called after each check.
std::vector<CheckResult> run_validation(const ValidateOptions& opts,
                                        const std::function<void(const CheckResult&)>& progress = {});

}  // namespace fgqc
