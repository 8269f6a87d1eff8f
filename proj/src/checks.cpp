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

#include "ruledarr/checks.hpp"

#include <algorithm>

#include "ruledarr/error.hpp"

namespace ruledarr {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Unverifiable: return "unverifiable";
  }
  return "unknown";
}

void ValidationReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail,
                    std::move(detail)});
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.status == CheckStatus::Pass; });
}

bool ValidationReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check* ValidationReport::find(std::string_view name) const {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

CheckStatus ValidationReport::status_of(std::string_view name) const {
  const Check* c = find(name);
  require(c != nullptr, ErrorCode::Internal, "no check named " + std::string(name));
  return c->status;
}

}  // namespace ruledarr
