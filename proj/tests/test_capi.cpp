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

// Exercises the shared library through its C header only.

#include <string>

#include "doctest.h"
#include "ruledarr/ruledarr.h"

namespace {

std::string render(ra_report* r, ra_format f = RA_FORMAT_JSON) {
  char* text = nullptr;
  REQUIRE(ra_report_render(r, f, 4, &text) == RA_OK);
  std::string out(text);
  ra_string_free(text);
  return out;
}

const char* kKlein =
    R"({"surface":{"g":0,"e":4},"class":{"a":1,"b":4},"d":21,"t":{"3":112,"4":84},"c0_disjoint":true})";

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(ra_status_string(RA_OK)) == "ok");
  CHECK(std::string(ra_status_string(RA_PARSE_ERROR)) == "ParseError");
  CHECK(std::string(ra_version()).size() > 0);
}

TEST_CASE("null arguments") {
  ra_profile* p = nullptr;
  CHECK(ra_profile_from_json(nullptr, &p) == RA_NULL_ARGUMENT);
  CHECK(ra_profile_from_json(kKlein, nullptr) == RA_NULL_ARGUMENT);
  CHECK(ra_hconst(nullptr, nullptr) == RA_NULL_ARGUMENT);
  CHECK(std::string(ra_last_error()) == "null argument");
  CHECK(ra_report_ok(nullptr) == 0);
  ra_profile_free(nullptr);
  ra_report_free(nullptr);
  ra_string_free(nullptr);
}

TEST_CASE("parse errors carry a message") {
  ra_profile* p = nullptr;
  CHECK(ra_profile_from_json("{", &p) == RA_PARSE_ERROR);
  CHECK(p == nullptr);
  CHECK(std::string(ra_last_error()).find("malformed JSON") != std::string::npos);
}

TEST_CASE("Harbourne constant through the C API") {
  ra_profile* p = nullptr;
  REQUIRE(ra_profile_from_json(kKlein, &p) == RA_OK);
  char *num = nullptr, *den = nullptr;
  REQUIRE(ra_harbourne_constant(p, &num, &den) == RA_OK);
  CHECK(std::string(num) == "-3");
  CHECK(std::string(den) == "1");
  ra_string_free(num);
  ra_string_free(den);

  ra_report* r = nullptr;
  REQUIRE(ra_hconst(p, &r) == RA_OK);
  CHECK(ra_report_ok(r) == 1);
  CHECK(render(r).find(R"("num": "-3")") != std::string::npos);
  ra_report_free(r);

  char* json = nullptr;
  REQUIRE(ra_profile_to_json(p, &json) == RA_OK);
  ra_profile* again = nullptr;
  CHECK(ra_profile_from_json(json, &again) == RA_OK);
  ra_string_free(json);
  ra_profile_free(again);
  ra_profile_free(p);
}

TEST_CASE("pull-backs") {
  ra_lines* w = nullptr;
  REQUIRE(ra_lines_builtin("wiman", &w) == RA_OK);
  ra_report* r = nullptr;
  REQUIRE(ra_pullback(w, 4, &r) == RA_OK);
  CHECK(render(r, RA_FORMAT_PRETTY).find("-3.3582") != std::string::npos);
  ra_report_free(r);
  CHECK(ra_pullback(w, 3, &r) == RA_PRECONDITION_VIOLATED);
  CHECK(r == nullptr);
  ra_profile* p = nullptr;
  REQUIRE(ra_pullback_profile(w, 6, &p) == RA_OK);
  ra_profile_free(p);
  ra_lines_free(w);
  CHECK(ra_lines_builtin("fermat", &w) == RA_INVALID_ARGUMENT);
}

TEST_CASE("incidence") {
  ra_incidence* inc = nullptr;
  REQUIRE(ra_incidence_from_json(R"({"d":4,"points":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})",
                                 &inc) == RA_OK);
  uint64_t rank = 0;
  REQUIRE(ra_incidence_rank(inc, &rank) == RA_OK);
  CHECK(rank == 4);
  ra_report* r = nullptr;
  REQUIRE(ra_incidence_check(inc, "2", nullptr, &r) == RA_OK);
  CHECK(ra_report_ok(r) == 0);
  ra_report_free(r);
  CHECK(ra_incidence_check(inc, nullptr, "{\"surface\":{}}", &r) == RA_PARSE_ERROR);
  ra_incidence_free(inc);
}

TEST_CASE("scan grid") {
  ra_grid* g = nullptr;
  REQUIRE(ra_grid_default(&g) == RA_OK);
  REQUIRE(ra_grid_set_range(g, "g", 0, 0) == RA_OK);
  REQUIRE(ra_grid_set_range(g, "e", 4, 4) == RA_OK);
  REQUIRE(ra_grid_set_range(g, "a", 1, 1) == RA_OK);
  REQUIRE(ra_grid_set_range(g, "b_offset", 0, 0) == RA_OK);
  REQUIRE(ra_grid_set_range(g, "d", 21, 21) == RA_OK);
  CHECK(ra_grid_set_range(g, "x", 0, 0) == RA_INVALID_ARGUMENT);
  ra_report* r = nullptr;
  REQUIRE(ra_bq_scan(g, 3, &r) == RA_OK);
  CHECK(render(r).find(R"("total": "1")") != std::string::npos);
  ra_report_free(r);
  REQUIRE(ra_grid_set_range(g, "e", 2, 4) == RA_OK);
  CHECK(ra_bq_scan(g, 1, &r) == RA_PRECONDITION_VIOLATED);
  ra_grid_free(g);
}

TEST_CASE("render options") {
  ra_report* r = nullptr;
  REQUIRE(ra_gallery(4, &r) == RA_OK);
  char* text = nullptr;
  CHECK(ra_report_render(r, static_cast<ra_format>(7), 4, &text) == RA_INVALID_ARGUMENT);
  CHECK(ra_report_render(r, RA_FORMAT_JSON, -1, &text) == RA_INVALID_ARGUMENT);
  CHECK(render(r, RA_FORMAT_CSV).rfind("field,value\n", 0) == 0);
  ra_report_free(r);
}
