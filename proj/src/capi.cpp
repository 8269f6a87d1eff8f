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

#include "ruledarr/ruledarr.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "ruledarr/error.hpp"
#include "ruledarr/report.hpp"

struct ra_profile {
  ruledarr::ArrangementProfile value;
};
struct ra_incidence {
  ruledarr::IncidenceStructure value;
};
struct ra_lines {
  ruledarr::LineArrangement value;
};
struct ra_grid {
  ruledarr::ScanGrid value;
};
struct ra_report {
  ruledarr::report::Report value;
};

namespace {

thread_local std::string last_error;

ra_status status_of(ruledarr::ErrorCode code) {
  using ruledarr::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return RA_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return RA_PARSE_ERROR;
    case ErrorCode::PreconditionViolated: return RA_PRECONDITION_VIOLATED;
    case ErrorCode::NonNegativeEOnly: return RA_NON_NEGATIVE_E_ONLY;
    case ErrorCode::ValidationFailed: return RA_VALIDATION_FAILED;
    case ErrorCode::EmptySingularLocus: return RA_EMPTY_SINGULAR_LOCUS;
    case ErrorCode::AuditFailed: return RA_AUDIT_FAILED;
    case ErrorCode::InconsistentCurveStats: return RA_INCONSISTENT_CURVE_STATS;
    case ErrorCode::C0DisjointRequired: return RA_C0_DISJOINT_REQUIRED;
    case ErrorCode::BNotAE: return RA_B_NOT_AE;
    case ErrorCode::ParameterRange: return RA_PARAMETER_RANGE;
    case ErrorCode::MultiplicityProfileNotBinary26: return RA_PROFILE_NOT_BINARY_26;
    case ErrorCode::Internal: return RA_INTERNAL;
  }
  return RA_UNKNOWN;
}

template <class F>
ra_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return RA_OK;
  } catch (const ruledarr::Error& err) {
    last_error = err.what();
    return status_of(err.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RA_INTERNAL;
  } catch (const std::exception& err) {
    last_error = err.what();
    return RA_UNKNOWN;
  } catch (...) {
    last_error = "unknown failure";
    return RA_UNKNOWN;
  }
}

ra_status null_argument() {
  last_error = "null argument";
  return RA_NULL_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
ra_status make_report(ra_report** out, F&& build) {
  if (!out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new ra_report{build()}; });
}

}  // namespace

extern "C" {

const char* ra_version(void) { return "1.0.0"; }

const char* ra_status_string(ra_status status) {
  switch (status) {
    case RA_OK: return "ok";
    case RA_NULL_ARGUMENT: return "null argument";
    case RA_INVALID_ARGUMENT: return "InvalidArgument";
    case RA_PARSE_ERROR: return "ParseError";
    case RA_PRECONDITION_VIOLATED: return "PreconditionViolated";
    case RA_NON_NEGATIVE_E_ONLY: return "NonNegativeEOnly";
    case RA_VALIDATION_FAILED: return "ValidationFailed";
    case RA_EMPTY_SINGULAR_LOCUS: return "EmptySingularLocus";
    case RA_AUDIT_FAILED: return "AuditFailed";
    case RA_INCONSISTENT_CURVE_STATS: return "InconsistentCurveStats";
    case RA_C0_DISJOINT_REQUIRED: return "C0DisjointRequired";
    case RA_B_NOT_AE: return "BNotAE";
    case RA_PARAMETER_RANGE: return "ParameterRange";
    case RA_PROFILE_NOT_BINARY_26: return "MultiplicityProfileNotBinary26";
    case RA_INTERNAL: return "Internal";
    case RA_UNKNOWN: break;
  }
  return "unknown";
}

const char* ra_last_error(void) { return last_error.c_str(); }

ra_status ra_profile_from_json(const char* text, ra_profile** out) {
  if (!text || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = new ra_profile{ruledarr::io::profile_from_json(ruledarr::io::parse(text))};
  });
}

ra_status ra_profile_to_json(const ra_profile* p, char** out) {
  if (!p || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = dup(ruledarr::io::profile_to_json(p->value).dump(2) + "\n"); });
}

void ra_profile_free(ra_profile* p) { delete p; }

ra_status ra_incidence_from_json(const char* text, ra_incidence** out) {
  if (!text || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = new ra_incidence{ruledarr::io::incidence_from_json(ruledarr::io::parse(text))};
  });
}

void ra_incidence_free(ra_incidence* inc) { delete inc; }

ra_status ra_lines_from_json(const char* text, ra_lines** out) {
  if (!text || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = new ra_lines{ruledarr::io::lines_from_json(ruledarr::io::parse(text))};
  });
}

ra_status ra_lines_builtin(const char* name, ra_lines** out) {
  if (!name || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    for (const auto& L : ruledarr::gallery()) {
      if (L.name == name) {
        *out = new ra_lines{L};
        return;
      }
    }
    ruledarr::fail(ruledarr::ErrorCode::InvalidArgument,
                   std::string("no built-in arrangement named '") + name + "'");
  });
}

void ra_lines_free(ra_lines* lines) { delete lines; }

ra_status ra_grid_from_json(const char* text, ra_grid** out) {
  if (!out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = new ra_grid{text ? ruledarr::io::grid_from_json(ruledarr::io::parse(text))
                            : ruledarr::ScanGrid{}};
  });
}

ra_status ra_grid_default(ra_grid** out) { return ra_grid_from_json(nullptr, out); }

ra_status ra_grid_set_range(ra_grid* grid, const char* axis, int64_t lo, int64_t hi) {
  if (!grid || !axis) return null_argument();
  return guarded([&] {
    ruledarr::ScanGrid& g = grid->value;
    const std::string name = axis;
    ruledarr::IntRange* r = name == "g"          ? &g.g
                            : name == "e"        ? &g.e
                            : name == "a"        ? &g.a
                            : name == "b_offset" ? &g.b_offset
                            : name == "d"        ? &g.d
                                                 : nullptr;
    if (!r) ruledarr::fail(ruledarr::ErrorCode::InvalidArgument, "unknown grid axis " + name);
    *r = {lo, hi};
  });
}

void ra_grid_free(ra_grid* grid) { delete grid; }

ra_status ra_validate(const ra_profile* p, ra_report** out) {
  if (!p) return null_argument();
  return make_report(out, [&] { return ruledarr::report::validate(p->value); });
}

ra_status ra_hconst(const ra_profile* p, ra_report** out) {
  if (!p) return null_argument();
  return make_report(out, [&] { return ruledarr::report::hconst(p->value); });
}

ra_status ra_cover(const ra_profile* p, ra_report** out) {
  if (!p) return null_argument();
  return make_report(out, [&] { return ruledarr::report::cover(p->value); });
}

ra_status ra_bounds(const ra_profile* p, ra_report** out) {
  if (!p) return null_argument();
  return make_report(out, [&] { return ruledarr::report::bounds(p->value); });
}

ra_status ra_pullback(const ra_lines* lines, int64_t e, ra_report** out) {
  if (!lines) return null_argument();
  return make_report(out, [&] {
    return ruledarr::report::pullback(lines->value, ruledarr::Integer(std::to_string(e)));
  });
}

ra_status ra_pullback_profile(const ra_lines* lines, int64_t e, ra_profile** out) {
  if (!lines || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = new ra_profile{
        ruledarr::pullback(lines->value, ruledarr::Integer(std::to_string(e)))};
  });
}

ra_status ra_gallery(int64_t e, ra_report** out) {
  return make_report(out, [&] {
    return ruledarr::report::gallery(ruledarr::Integer(std::to_string(e)));
  });
}

ra_status ra_incidence_check(const ra_incidence* inc, const char* expected_h,
                             const char* embedding_json, ra_report** out) {
  if (!inc) return null_argument();
  return make_report(out, [&] {
    std::optional<ruledarr::Integer> h;
    if (expected_h) h = ruledarr::parse_integer(expected_h);
    std::optional<ruledarr::report::SurfaceAndClass> emb;
    if (embedding_json) {
      auto [s, cls] = ruledarr::io::embedding_from_json(ruledarr::io::parse(embedding_json));
      emb = ruledarr::report::SurfaceAndClass{s, cls};
    }
    return ruledarr::report::incidence_check(inc->value, h, emb);
  });
}

ra_status ra_bq_scan(const ra_grid* grid, unsigned workers, ra_report** out) {
  if (!grid) return null_argument();
  return make_report(out, [&] { return ruledarr::report::bq_scan(grid->value, workers); });
}

int ra_report_ok(const ra_report* r) { return r && r->value.ok ? 1 : 0; }

ra_status ra_report_render(const ra_report* r, ra_format format, int places, char** out) {
  if (!r || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    ruledarr::report::Format f;
    switch (format) {
      case RA_FORMAT_JSON: f = ruledarr::report::Format::Json; break;
      case RA_FORMAT_CSV: f = ruledarr::report::Format::Csv; break;
      case RA_FORMAT_PRETTY: f = ruledarr::report::Format::Pretty; break;
      default:
        ruledarr::fail(ruledarr::ErrorCode::InvalidArgument, "unknown output format");
    }
    ruledarr::require(places >= 0 && places <= 1000, ruledarr::ErrorCode::InvalidArgument,
                      "decimal places must lie in [0, 1000]");
    *out = dup(ruledarr::report::render(r->value, f, places));
  });
}

void ra_report_free(ra_report* r) { delete r; }

void ra_string_free(char* s) { std::free(s); }

ra_status ra_harbourne_constant(const ra_profile* p, char** num, char** den) {
  if (!p || !num || !den) return null_argument();
  *num = *den = nullptr;
  return guarded([&] {
    const ruledarr::Rational h = ruledarr::harbourne_constant(p->value);
    char* n = dup(h.get_num().get_str());
    try {
      *den = dup(h.get_den().get_str());
    } catch (...) {
      std::free(n);
      throw;
    }
    *num = n;
  });
}

ra_status ra_incidence_rank(const ra_incidence* inc, uint64_t* out) {
  if (!inc || !out) return null_argument();
  return guarded([&] { *out = ruledarr::incidence_rank(inc->value); });
}

}  // extern "C"
