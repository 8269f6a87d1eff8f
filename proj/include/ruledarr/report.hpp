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

#include <optional>
#include <string>

#include "ruledarr/io.hpp"

// One function per CLI subcommand. Each builds a machine-readable report;
// `ok` is false when the input fails validation or an audit (the report is
// still complete and explains why).
namespace ruledarr::report {

using io::json;

enum class Format { Json, Csv, Pretty };

struct Report {
  std::string command;
  json body;
  bool ok = true;
};

Report validate(const ArrangementProfile& p);
Report hconst(const ArrangementProfile& p);
Report cover(const ArrangementProfile& p);
Report bounds(const ArrangementProfile& p);
Report pullback(const LineArrangement& L, const Integer& e);
Report gallery(const Integer& e);

struct SurfaceAndClass {
  RuledSurface surface;
  NumClass cls;
};

/// Without `expected_h` the pair (1, 2) co-occurrence count is used.
Report incidence_check(const IncidenceStructure& inc, std::optional<Integer> expected_h,
                       const std::optional<SurfaceAndClass>& embedding);
Report bq_scan(const ScanGrid& grid, unsigned workers);

/// JSON is pretty-printed with sorted keys. CSV is a two-column
/// field,value table with dotted paths. Pretty mode is the only one that
/// prints decimals (`places` fractional digits, half-to-even).
std::string render(const Report& r, Format format, int places);

}  // namespace ruledarr::report
