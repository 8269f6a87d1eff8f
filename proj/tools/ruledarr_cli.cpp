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

// ruledarr command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 2 the report flags a validation/audit failure,
// 1 malformed input or a rejected request.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <utility>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "ruledarr/ruledarr.h"

namespace {

struct InputError {
  std::string message;
};

std::string read_source(const std::string& path, const std::string& inline_json) {
  if (!inline_json.empty()) return inline_json;
  if (path.empty()) throw InputError{"no input: pass --input FILE, --input - or --json TEXT"};
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void check(ra_status status) {
  if (status != RA_OK) {
    throw InputError{std::string(ra_status_string(status)) + ": " + ra_last_error()};
  }
}

// "lo:hi" or a single value.
std::pair<long long, long long> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError{"bad range '" + text + "', expected lo:hi"};
  };
  const long long lo = number(text.substr(0, colon));
  return {lo, colon == std::string::npos ? lo : number(text.substr(colon + 1))};
}

int emit(ra_report* report, ra_format format, int places) {
  char* text = nullptr;
  const ra_status status = ra_report_render(report, format, places, &text);
  const int ok = ra_report_ok(report);
  ra_report_free(report);
  check(status);
  std::fputs(text, stdout);
  ra_string_free(text);
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transversal curve arrangements on ruled surfaces: invariants, bounds, scans"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", ra_version());

  std::string format_name = "json";
  int places = 6;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--places", places, "Decimal places in pretty mode")
      ->check(CLI::Range(0, 1000))
      ->capture_default_str();

  std::string input, inline_json;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "JSON input file, - for stdin");
    sub->add_option("--json", inline_json, "Inline JSON input");
  };

  std::map<std::string, CLI::App*> profile_cmds;
  for (const auto& [name, help] : std::map<std::string, std::string>{
           {"validate", "Check a profile against the standing and extra assumptions"},
           {"hconst", "Harbourne constant of a profile"},
           {"cover", "Chern invariants of the branched abelian cover"},
           {"bounds", "All lower bounds and inequality verdicts for a profile"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_input(sub);
    profile_cmds[name] = sub;
  }

  std::string builtin;
  std::string e_text = "4";
  bool profile_only = false;
  CLI::App* pull = app.add_subcommand("pullback", "Pull a plane line arrangement back to X_e");
  add_input(pull);
  pull->add_option("--builtin", builtin, "Built-in arrangement")
      ->check(CLI::IsMember({"klein", "wiman"}));
  pull->add_option("--e", e_text, "Invariant e of the target surface")->capture_default_str();
  pull->add_flag("--profile-only", profile_only, "Print just the pulled-back profile JSON");

  CLI::App* gallery = app.add_subcommand("gallery", "Built-in arrangements and their pull-backs");
  gallery->add_option("--e", e_text, "Invariant e of the target surface")->capture_default_str();

  std::string h_text, g_emb, e_emb, a_emb, b_emb;
  CLI::App* inc = app.add_subcommand("incidence-check", "Audit an explicit incidence structure");
  add_input(inc);
  inc->add_option("--expected-h", h_text, "Expected pairwise co-occurrence");
  auto* og = inc->add_option("--g", g_emb, "Genus of the base curve");
  auto* oe = inc->add_option("--e", e_emb, "Invariant e");
  auto* oa = inc->add_option("--a", a_emb, "Class coefficient a");
  auto* ob = inc->add_option("--b", b_emb, "Class coefficient b");
  og->needs(oe, oa, ob);
  oe->needs(og, oa, ob);
  oa->needs(og, oe, ob);
  ob->needs(og, oe, oa);

  std::string config;
  std::map<std::string, std::string> ranges;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* bq = app.add_subcommand("bq-scan", "Scan a parameter grid for ball-quotient covers");
  bq->add_option("--config", config, "JSON scan grid");
  for (const char* key : {"g", "e", "a", "b-offset", "d"}) {
    bq->add_option(std::string("--") + key, ranges[key], "Range lo:hi");
  }
  bq->add_option("--workers", workers, "Worker threads (output does not depend on it)")
      ->check(CLI::Range(1u, 1024u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  const ra_format format = format_name == "csv"      ? RA_FORMAT_CSV
                           : format_name == "pretty" ? RA_FORMAT_PRETTY
                                                     : RA_FORMAT_JSON;
  try {
    for (const auto& [name, sub] : profile_cmds) {
      if (!sub->parsed()) continue;
      ra_profile* p = nullptr;
      check(ra_profile_from_json(read_source(input, inline_json).c_str(), &p));
      ra_report* report = nullptr;
      ra_status status = name == "validate" ? ra_validate(p, &report)
                         : name == "hconst" ? ra_hconst(p, &report)
                         : name == "cover"  ? ra_cover(p, &report)
                                            : ra_bounds(p, &report);
      ra_profile_free(p);
      check(status);
      return emit(report, format, places);
    }

    auto parse_e = [&]() -> long long {
      try {
        std::size_t used = 0;
        const long long e = std::stoll(e_text, &used);
        if (used == e_text.size()) return e;
      } catch (const std::exception&) {
      }
      throw InputError{"--e must be an integer"};
    };

    if (pull->parsed()) {
      ra_lines* lines = nullptr;
      if (!builtin.empty()) {
        if (!input.empty() || !inline_json.empty()) {
          throw InputError{"--builtin and an input source are mutually exclusive"};
        }
        check(ra_lines_builtin(builtin.c_str(), &lines));
      } else {
        check(ra_lines_from_json(read_source(input, inline_json).c_str(), &lines));
      }
      const long long e = parse_e();
      if (profile_only) {
        ra_profile* p = nullptr;
        ra_status status = ra_pullback_profile(lines, e, &p);
        ra_lines_free(lines);
        check(status);
        char* text = nullptr;
        status = ra_profile_to_json(p, &text);
        ra_profile_free(p);
        check(status);
        std::fputs(text, stdout);
        ra_string_free(text);
        return 0;
      }
      ra_report* report = nullptr;
      const ra_status status = ra_pullback(lines, e, &report);
      ra_lines_free(lines);
      check(status);
      return emit(report, format, places);
    }

    if (gallery->parsed()) {
      ra_report* report = nullptr;
      check(ra_gallery(parse_e(), &report));
      return emit(report, format, places);
    }

    if (inc->parsed()) {
      ra_incidence* structure = nullptr;
      check(ra_incidence_from_json(read_source(input, inline_json).c_str(), &structure));
      std::string embedding;
      if (!g_emb.empty()) {
        embedding = "{\"surface\":{\"g\":" + g_emb + ",\"e\":" + e_emb + "},\"class\":{\"a\":" +
                    a_emb + ",\"b\":" + b_emb + "}}";
      }
      ra_report* report = nullptr;
      const ra_status status =
          ra_incidence_check(structure, h_text.empty() ? nullptr : h_text.c_str(),
                             embedding.empty() ? nullptr : embedding.c_str(), &report);
      ra_incidence_free(structure);
      check(status);
      return emit(report, format, places);
    }

    if (bq->parsed()) {
      ra_grid* grid = nullptr;
      if (config.empty()) {
        check(ra_grid_default(&grid));
      } else {
        check(ra_grid_from_json(read_source(config, "").c_str(), &grid));
      }
      for (const auto& [key, text] : ranges) {
        if (text.empty()) continue;
        const auto [lo, hi] = parse_range(text);
        const ra_status status =
            ra_grid_set_range(grid, key == "b-offset" ? "b_offset" : key.c_str(), lo, hi);
        if (status != RA_OK) ra_grid_free(grid);
        check(status);
      }
      ra_report* report = nullptr;
      const ra_status status = ra_bq_scan(grid, workers, &report);
      ra_grid_free(grid);
      check(status);
      return emit(report, format, places);
    }
  } catch (const InputError& err) {
    std::cerr << "error: " << err.message << '\n';
    return 1;
  }
  return 1;
}
