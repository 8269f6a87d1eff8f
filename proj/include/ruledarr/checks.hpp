// Copyright 2026 The ruledarr Authors
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

#include <string>
#include <string_view>
#include <vector>

namespace ruledarr {

enum class CheckStatus { Pass, Fail, Unverifiable };

std::string_view to_string(CheckStatus status);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

/// Multi-check report. Checks are independent; nothing short-circuits.
struct ValidationReport {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {});
  void add(Check check) { checks.push_back(std::move(check)); }

  /// True when every check is Pass.
  bool passed() const;
  bool any_failed() const;
  const Check* find(std::string_view name) const;
  CheckStatus status_of(std::string_view name) const;
};

}  // namespace ruledarr
