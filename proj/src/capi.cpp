// Copyright 2026 The Vincular Authors
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

#include "vincular/vincular.h"

#include <exception>
#include <new>
#include <string>

#include "vincular/commands.hpp"
#include "vincular/enumerate.hpp"
#include "vincular/error.hpp"
#include "vincular/pattern.hpp"
#include "vincular/permutation.hpp"
#include "vincular/report.hpp"

struct vin_session {
  vincular::RunConfig config;
  std::string output;
  std::string error;
};

struct vin_pattern {
  vincular::VincularPattern pattern;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

vin_status fail(vin_session* session, vin_status status, std::string message) {
  g_last_error = message;
  if (session != nullptr) {
    session->output.clear();
    session->error = std::move(message);
  }
  return status;
}

vin_status status_for(vincular::ErrorCode code) {
  switch (code) {
    case vincular::ErrorCode::kParse: return VIN_ERR_PARSE;
    case vincular::ErrorCode::kRange: return VIN_ERR_RANGE;
    case vincular::ErrorCode::kData: return VIN_ERR_DATA;
    case vincular::ErrorCode::kInternal: break;
  }
  return VIN_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
vin_status guarded(vin_session* session, Body&& body) {
  try {
    g_last_error.clear();
    if (session != nullptr) session->error.clear();
    return body();
  } catch (const vincular::Error& e) {
    return fail(session, status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(session, VIN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(session, VIN_ERR_INTERNAL, e.what());
  }
}

template <typename Run>
vin_status run(vin_session* session, Run&& make_report) {
  if (session == nullptr) return fail(nullptr, VIN_ERR_ARGUMENT, "null session");
  return guarded(session, [&] {
    const vincular::Report report = make_report(session->config);
    session->output = vincular::render(report, session->config.format);
    return vincular::exit_code(report) == 0 ? VIN_OK : VIN_VERIFY_FAILED;
  });
}

const char* or_empty(const char* s) { return s == nullptr ? "" : s; }

}  // namespace

extern "C" {

const char* vin_version(void) { return "1.0.0"; }

const char* vin_status_string(vin_status status) {
  switch (status) {
    case VIN_OK: return "ok";
    case VIN_VERIFY_FAILED: return "verification failed";
    case VIN_ERR_PARSE: return "parse error";
    case VIN_ERR_RANGE: return "range error";
    case VIN_ERR_DATA: return "data error";
    case VIN_ERR_ARGUMENT: return "invalid argument";
    case VIN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* vin_last_error(void) { return g_last_error.c_str(); }

vin_session* vin_session_new(void) {
  try {
    return new vin_session();
  } catch (...) {
    g_last_error = "out of memory";
    return nullptr;
  }
}

void vin_session_free(vin_session* session) { delete session; }

vin_status vin_session_set_max_n(vin_session* session, int max_n) {
  if (session == nullptr) return fail(nullptr, VIN_ERR_ARGUMENT, "null session");
  if (max_n < 1 || max_n > vincular::kMaxRunLength) {
    return fail(session, VIN_ERR_RANGE,
                "max_n must be in 1.." + std::to_string(vincular::kMaxRunLength));
  }
  session->config.max_n = max_n;
  return VIN_OK;
}

vin_status vin_session_set_jobs(vin_session* session, unsigned jobs) {
  if (session == nullptr) return fail(nullptr, VIN_ERR_ARGUMENT, "null session");
  if (jobs == 0) return fail(session, VIN_ERR_RANGE, "jobs must be at least 1");
  session->config.workers = jobs;
  return VIN_OK;
}

vin_status vin_session_set_seed(vin_session* session, uint64_t seed) {
  if (session == nullptr) return fail(nullptr, VIN_ERR_ARGUMENT, "null session");
  session->config.seed = seed;
  return VIN_OK;
}

vin_status vin_session_set_oracle(vin_session* session, int enabled) {
  if (session == nullptr) return fail(nullptr, VIN_ERR_ARGUMENT, "null session");
  session->config.oracle_check = enabled != 0;
  return VIN_OK;
}

vin_status vin_session_set_format(vin_session* session, const char* format) {
  if (session == nullptr) return fail(nullptr, VIN_ERR_ARGUMENT, "null session");
  const auto f = vincular::output_format_from_string(or_empty(format));
  if (!f) {
    return fail(session, VIN_ERR_ARGUMENT,
                "unknown format '" + std::string(or_empty(format)) + "'");
  }
  session->config.format = *f;
  return VIN_OK;
}

vin_status vin_session_set_data_path(vin_session* session, const char* path) {
  if (session == nullptr) return fail(nullptr, VIN_ERR_ARGUMENT, "null session");
  session->config.data_path = or_empty(path);
  return VIN_OK;
}

const char* vin_session_last_error(const vin_session* session) {
  return session == nullptr ? "" : session->error.c_str();
}

const char* vin_session_output(const vin_session* session) {
  return session == nullptr ? "" : session->output.c_str();
}

vin_status vin_run_check(vin_session* session, const char* permutation,
                         const char* pattern) {
  return run(session, [&](const vincular::RunConfig& c) {
    return vincular::run_check(c, or_empty(permutation), or_empty(pattern));
  });
}

vin_status vin_run_count(vin_session* session, const char* patterns, int n) {
  return run(session, [&](const vincular::RunConfig& c) {
    const auto set = vincular::PatternSet::parse(or_empty(patterns));
    return n > 0 ? vincular::run_count(c, set, n) : vincular::run_count(c, set);
  });
}

vin_status vin_run_list(vin_session* session, const char* patterns, int n) {
  return run(session, [&](const vincular::RunConfig& c) {
    return vincular::run_list(c, vincular::PatternSet::parse(or_empty(patterns)),
                              n);
  });
}

vin_status vin_run_classes(vin_session* session, int k) {
  return run(session, [&](const vincular::RunConfig& c) {
    return vincular::run_classes(c, k);
  });
}

vin_status vin_run_classify(vin_session* session, int k) {
  return run(session, [&](const vincular::RunConfig& c) {
    return vincular::run_classify(c, k);
  });
}

vin_status vin_run_verify(vin_session* session, const char* scope,
                          int table_id) {
  if (session == nullptr) return fail(nullptr, VIN_ERR_ARGUMENT, "null session");
  const auto s = vincular::verify_scope_from_string(or_empty(scope));
  if (!s) {
    return fail(session, VIN_ERR_ARGUMENT,
                "unknown verify scope '" + std::string(or_empty(scope)) + "'");
  }
  return run(session, [&](const vincular::RunConfig& c) {
    return vincular::run_verify(c, *s, table_id);
  });
}

vin_status vin_pattern_parse(const char* text, vin_pattern** out) {
  if (out == nullptr) return fail(nullptr, VIN_ERR_ARGUMENT, "null output");
  *out = nullptr;
  return guarded(nullptr, [&] {
    auto p = vincular::parse_pattern(or_empty(text));
    std::string formatted = p.to_string();
    *out = new vin_pattern{std::move(p), std::move(formatted)};
    return VIN_OK;
  });
}

void vin_pattern_free(vin_pattern* pattern) { delete pattern; }

const char* vin_pattern_format(const vin_pattern* pattern) {
  return pattern == nullptr ? "" : pattern->text.c_str();
}

vin_status vin_pattern_contains(const vin_pattern* pattern,
                                const char* permutation, int* result) {
  if (pattern == nullptr || result == nullptr) {
    return fail(nullptr, VIN_ERR_ARGUMENT, "null argument");
  }
  return guarded(nullptr, [&] {
    const auto perm = vincular::parse_permutation(or_empty(permutation));
    *result = vincular::contains(perm, pattern->pattern) ? 1 : 0;
    return VIN_OK;
  });
}

vin_status vin_count(const char* patterns, int n, uint64_t* out) {
  if (out == nullptr) return fail(nullptr, VIN_ERR_ARGUMENT, "null output");
  return guarded(nullptr, [&] {
    *out = vincular::count_avoiders(
        n, vincular::PatternSet::parse(or_empty(patterns)));
    return VIN_OK;
  });
}

}  // extern "C"
