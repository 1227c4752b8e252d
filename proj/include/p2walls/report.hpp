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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "p2walls/chern.hpp"
#include "p2walls/walls.hpp"

namespace p2walls {

struct RenderOptions {
  int decimals = 4;
  bool text = false;  ///< line-oriented "key: value" output instead of JSON
  int nested_walls = 3;
  std::uint64_t max_candidates = kDefaultSearchBudget;
};

/// Outcome flags for commands whose output is meaningful even when they
/// signal a problem.
enum class RenderOutcome { Ok, NonemptyExclusion, BudgetExceeded, TableMismatch };

struct Rendered {
  std::string body;
  RenderOutcome outcome = RenderOutcome::Ok;
};

std::string render_classify(const ChernChar& xi, const RenderOptions& opts);
std::string render_delta(const Rat& mu, const RenderOptions& opts);
std::string render_extremal(const ChernChar& xi, const RenderOptions& opts);
std::string render_wall(const ChernChar& xi, const RenderOptions& opts);
std::string render_wall_svg(const ChernChar& xi, const RenderOptions& opts);
Rendered render_exclude(const ChernChar& xi, const RenderOptions& opts);
std::string render_ample(const ChernChar& xi, const RenderOptions& opts);
Rendered render_tables(int which, const RenderOptions& opts);

struct SweepSpec {
  Integer rank_min{1};
  Integer rank_max{1};
  std::vector<Rat> slopes;  ///< empty: c1/r for c1 = 1..r
  int count = 1;            ///< lattice discriminants per (r, mu) column
};

/// Characters visited by a sweep, in emission order: for each rank and slope,
/// `count` consecutive lattice discriminants starting just above delta(mu).
std::vector<ChernChar> sweep_characters(const SweepSpec& spec);

/// Newline-delimited JSON, one ample report or error object per character.
std::string render_sweep(const SweepSpec& spec, const RenderOptions& opts);

}  // namespace p2walls
