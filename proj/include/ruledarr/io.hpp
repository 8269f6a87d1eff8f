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
#include <utility>

#include "json.hpp"
#include "ruledarr/arrangement.hpp"
#include "ruledarr/ballquotient.hpp"
#include "ruledarr/incidence.hpp"
#include "ruledarr/pullback.hpp"

// JSON schemas shared by the C API and the CLI. Parsers reject unknown keys
// and non-integer numbers with ErrorCode::ParseError.
namespace ruledarr::io {

using nlohmann::json;

/// {"surface":{"g":0,"e":4},"class":{"a":1,"b":4},"d":21,"t":{"3":112,"4":84},
///  "c0_disjoint":true,"a1_four_curve_flag":false}
ArrangementProfile profile_from_json(const json& j);
json profile_to_json(const ArrangementProfile& p);

/// {"surface":{"g":0,"e":4},"class":{"a":1,"b":4}}
std::pair<RuledSurface, NumClass> embedding_from_json(const json& j);

/// {"d":4,"points":[[1,2],[1,3,4]]}, 1-based curve indices.
IncidenceStructure incidence_from_json(const json& j);
json incidence_to_json(const IncidenceStructure& inc);

/// {"name":"klein","d":21,"t":{"3":28,"4":21}}; name is optional.
LineArrangement lines_from_json(const json& j);
json lines_to_json(const LineArrangement& L);

/// {"g":[0,5],"e":[4,10],"a":[1,5],"b_offset":[0,10],"d":[4,50]}; missing
/// keys keep the default grid.
ScanGrid grid_from_json(const json& j);
json grid_to_json(const ScanGrid& grid);

/// Parses text, mapping syntax errors to ParseError.
json parse(const std::string& text);

/// Exact rational as {"num": "...", "den": "..."}.
json rational_json(const Rational& q);
json integer_json(const Integer& v);
json multiplicities_json(const Multiplicities& t);

}  // namespace ruledarr::io
