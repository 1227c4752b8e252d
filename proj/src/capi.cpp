////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of p2walls.                                             //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////
#include "p2walls/p2walls.h"

#include <exception>
#include <new>
#include <string>

#include "p2walls/report.hpp"

struct p2w_char {
  p2walls::ChernChar value;
  std::string text;
  std::string invariant_text;
};

struct p2w_result {
  std::string text;
};

namespace {

using namespace p2walls;

thread_local std::string g_last_error;

p2w_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return P2W_PARSE_ERROR;
    case ErrorCode::NotIntegral: return P2W_NOT_INTEGRAL;
    case ErrorCode::NonPositiveRank: return P2W_NON_POSITIVE_RANK;
    case ErrorCode::InvalidArgument: return P2W_INVALID_ARGUMENT;
    case ErrorCode::TreeDepthExceeded: return P2W_TREE_DEPTH_EXCEEDED;
    case ErrorCode::NoStableCharacter: return P2W_NO_STABLE_CHARACTER;
    case ErrorCode::AdmissibilityFailed: return P2W_ADMISSIBILITY_FAILED;
    case ErrorCode::NoAdmissible: return P2W_NO_ADMISSIBLE;
    case ErrorCode::UnexpectedPositiveChi: return P2W_UNEXPECTED_POSITIVE_CHI;
    case ErrorCode::HeightZeroInput: return P2W_HEIGHT_ZERO_INPUT;
    case ErrorCode::NotSemistableInput: return P2W_NOT_SEMISTABLE_INPUT;
    case ErrorCode::DependentCharacters: return P2W_DEPENDENT_CHARACTERS;
    case ErrorCode::NoRoot: return P2W_NO_ROOT;
    case ErrorCode::EmptyGiesekerWall: return P2W_EMPTY_GIESEKER_WALL;
    case ErrorCode::SearchBudgetExceeded: return P2W_SEARCH_BUDGET_EXCEEDED;
  }
  return P2W_INTERNAL_ERROR;
}

RenderOptions to_options(const p2w_options* opts) {
  RenderOptions o;
  if (opts) {
    o.decimals = opts->decimals;
    o.text = opts->text != 0;
    o.nested_walls = opts->nested_walls;
    o.max_candidates = opts->max_candidates;
  }
  return o;
}

p2w_status fail(p2w_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body() (returning a Rendered) and translates exceptions into statuses.
template <typename F>
p2w_status run(p2w_result** out, F&& body) {
  if (!out) return fail(P2W_NULL_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  g_last_error.clear();
  try {
    Rendered r = body();
    *out = new p2w_result{std::move(r.body)};
    switch (r.outcome) {
      case RenderOutcome::Ok: return P2W_OK;
      case RenderOutcome::NonemptyExclusion:
        g_last_error = "exclusion search found characters with larger walls";
        return P2W_EXCLUSION_NONEMPTY;
      case RenderOutcome::BudgetExceeded:
        g_last_error = "exclusion search exceeded its candidate budget";
        return P2W_SEARCH_BUDGET_EXCEEDED;
      case RenderOutcome::TableMismatch:
        g_last_error = "computed rows differ from the golden table";
        return P2W_TABLE_MISMATCH;
    }
    return P2W_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(P2W_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(P2W_INTERNAL_ERROR, e.what());
  }
}

template <typename F>
p2w_status run_char(const p2w_char* ch, p2w_result** out, F&& body) {
  if (!ch) {
    if (out) *out = nullptr;
    return fail(P2W_NULL_ARGUMENT, "character handle is NULL");
  }
  return run(out, [&] { return Rendered{body(ch->value), RenderOutcome::Ok}; });
}

std::vector<Rat> parse_slopes(const char* text) {
  std::vector<Rat> out;
  if (!text) return out;
  std::string s(text);
  size_t start = 0;
  while (start <= s.size() && !s.empty()) {
    size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(Rat::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

void p2w_options_init(p2w_options* opts) {
  if (!opts) return;
  opts->decimals = 4;
  opts->text = 0;
  opts->nested_walls = 3;
  opts->max_candidates = kDefaultSearchBudget;
}

p2w_status p2w_char_parse(const char* text, p2w_char** out) {
  if (!out) return fail(P2W_NULL_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  if (!text) return fail(P2W_NULL_ARGUMENT, "character text is NULL");
  try {
    ChernChar xi = parse_character(text);
    *out = new p2w_char{xi, xi.str(), xi.str_invariant()};
    return P2W_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(P2W_INTERNAL_ERROR, e.what());
  }
}

void p2w_char_free(p2w_char* ch) { delete ch; }

const char* p2w_char_text(const p2w_char* ch) { return ch ? ch->text.c_str() : nullptr; }

const char* p2w_char_invariant_text(const p2w_char* ch) { return ch ? ch->invariant_text.c_str() : nullptr; }

p2w_status p2w_classify(const p2w_char* ch, const p2w_options* opts, p2w_result** out) {
  return run_char(ch, out, [&](const ChernChar& xi) { return render_classify(xi, to_options(opts)); });
}

p2w_status p2w_delta(const char* mu, const p2w_options* opts, p2w_result** out) {
  if (!mu) {
    if (out) *out = nullptr;
    return fail(P2W_NULL_ARGUMENT, "slope text is NULL");
  }
  return run(out, [&] { return Rendered{render_delta(Rat::parse(mu), to_options(opts)), RenderOutcome::Ok}; });
}

p2w_status p2w_extremal(const p2w_char* ch, const p2w_options* opts, p2w_result** out) {
  return run_char(ch, out, [&](const ChernChar& xi) { return render_extremal(xi, to_options(opts)); });
}

p2w_status p2w_wall(const p2w_char* ch, const p2w_options* opts, p2w_result** out) {
  return run_char(ch, out, [&](const ChernChar& xi) { return render_wall(xi, to_options(opts)); });
}

p2w_status p2w_wall_svg(const p2w_char* ch, const p2w_options* opts, p2w_result** out) {
  return run_char(ch, out, [&](const ChernChar& xi) { return render_wall_svg(xi, to_options(opts)); });
}

p2w_status p2w_exclude(const p2w_char* ch, const p2w_options* opts, p2w_result** out) {
  if (!ch) {
    if (out) *out = nullptr;
    return fail(P2W_NULL_ARGUMENT, "character handle is NULL");
  }
  return run(out, [&] { return render_exclude(ch->value, to_options(opts)); });
}

p2w_status p2w_ample(const p2w_char* ch, const p2w_options* opts, p2w_result** out) {
  return run_char(ch, out, [&](const ChernChar& xi) { return render_ample(xi, to_options(opts)); });
}

p2w_status p2w_tables_verify(int which, const p2w_options* opts, p2w_result** out) {
  return run(out, [&] { return render_tables(which, to_options(opts)); });
}

p2w_status p2w_sweep(int64_t rank_min, int64_t rank_max, const char* slopes, int count, const p2w_options* opts,
                     p2w_result** out) {
  return run(out, [&] {
    SweepSpec spec;
    spec.rank_min = Integer(static_cast<long>(rank_min));
    spec.rank_max = Integer(static_cast<long>(rank_max));
    spec.slopes = parse_slopes(slopes);
    spec.count = count;
    return Rendered{render_sweep(spec, to_options(opts)), RenderOutcome::Ok};
  });
}

const char* p2w_result_text(const p2w_result* res) { return res ? res->text.c_str() : nullptr; }

void p2w_result_free(p2w_result* res) { delete res; }

const char* p2w_status_name(p2w_status status) {
  switch (status) {
    case P2W_OK: return "OK";
    case P2W_PARSE_ERROR: return "ParseError";
    case P2W_NOT_INTEGRAL: return "NotIntegral";
    case P2W_NON_POSITIVE_RANK: return "NonPositiveRank";
    case P2W_INVALID_ARGUMENT: return "InvalidArgument";
    case P2W_TREE_DEPTH_EXCEEDED: return "TreeDepthExceeded";
    case P2W_NO_STABLE_CHARACTER: return "NoStableCharacter";
    case P2W_ADMISSIBILITY_FAILED: return "AdmissibilityFailed";
    case P2W_NO_ADMISSIBLE: return "NoAdmissible";
    case P2W_UNEXPECTED_POSITIVE_CHI: return "UnexpectedPositiveChi";
    case P2W_HEIGHT_ZERO_INPUT: return "HeightZeroInput";
    case P2W_NOT_SEMISTABLE_INPUT: return "NotSemistableInput";
    case P2W_DEPENDENT_CHARACTERS: return "DependentCharacters";
    case P2W_NO_ROOT: return "NoRoot";
    case P2W_EMPTY_GIESEKER_WALL: return "EmptyGiesekerWall";
    case P2W_SEARCH_BUDGET_EXCEEDED: return "SearchBudgetExceeded";
    case P2W_TABLE_MISMATCH: return "TableMismatch";
    case P2W_EXCLUSION_NONEMPTY: return "ExclusionNonempty";
    case P2W_NULL_ARGUMENT: return "NullArgument";
    case P2W_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

int p2w_status_exit_code(p2w_status status) {
  switch (status) {
    case P2W_OK: return 0;
    case P2W_PARSE_ERROR:
    case P2W_NOT_INTEGRAL:
    case P2W_NON_POSITIVE_RANK:
    case P2W_INVALID_ARGUMENT:
    case P2W_HEIGHT_ZERO_INPUT:
    case P2W_NOT_SEMISTABLE_INPUT:
    case P2W_DEPENDENT_CHARACTERS:
    case P2W_NULL_ARGUMENT:
      return 2;
    case P2W_TABLE_MISMATCH: return 3;
    case P2W_UNEXPECTED_POSITIVE_CHI:
    case P2W_EXCLUSION_NONEMPTY:
    case P2W_EMPTY_GIESEKER_WALL:
    case P2W_TREE_DEPTH_EXCEEDED:
    case P2W_INTERNAL_ERROR:
      return 4;
    case P2W_ADMISSIBILITY_FAILED:
    case P2W_NO_ADMISSIBLE:
    case P2W_NO_ROOT:
    case P2W_NO_STABLE_CHARACTER:
      return 5;
    case P2W_SEARCH_BUDGET_EXCEEDED: return 6;
  }
  return 4;
}

const char* p2w_last_error(void) { return g_last_error.c_str(); }

const char* p2w_version(void) { return "1.0.0"; }

}  // extern "C"
