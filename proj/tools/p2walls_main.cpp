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
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "p2walls/p2walls.h"

namespace {

struct CharHandle {
  p2w_char* ptr = nullptr;
  ~CharHandle() { p2w_char_free(ptr); }
};

struct ResultHandle {
  p2w_result* ptr = nullptr;
  ~ResultHandle() { p2w_result_free(ptr); }
};

int report_failure(p2w_status status) {
  std::fprintf(stderr, "p2walls: %s: %s\n", p2w_status_name(status), p2w_last_error());
  return p2w_status_exit_code(status);
}

// Prints whatever result came back and converts the status to an exit code.
int finish(p2w_status status, const ResultHandle& res) {
  if (res.ptr) std::fputs(p2w_result_text(res.ptr), stdout);
  if (status == P2W_OK) return 0;
  return report_failure(status);
}

template <typename Command>
int with_char(const std::string& text, Command&& command) {
  CharHandle ch;
  p2w_status st = p2w_char_parse(text.c_str(), &ch.ptr);
  if (st != P2W_OK) return report_failure(st);
  ResultHandle res;
  st = command(ch.ptr, &res.ptr);
  return finish(st, res);
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("P2WALLS_SEARCH_BUDGET");
  if (!env || !*env) return fallback;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    std::fprintf(stderr, "p2walls: ignoring malformed P2WALLS_SEARCH_BUDGET='%s'\n", env);
    return fallback;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bridgeland walls and ample cones for moduli of sheaves on the projective plane"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(p2w_version()));

  p2w_options opts;
  p2w_options_init(&opts);
  bool want_json = false;
  bool want_text = false;
  auto add_format = [&](CLI::App* sub) {
    sub->add_flag("--json", want_json, "JSON output (default)");
    sub->add_flag("--text", want_text, "line-oriented text output");
    sub->add_option("--decimals", opts.decimals, "places in decimal renderings")->check(CLI::Range(0, 30));
  };

  std::string character;
  const char* char_help = "character as r,c1,ch2 or r:mu:Delta";

  auto* classify = app.add_subcommand("classify", "stability classification");
  classify->add_option("character", character, char_help)->required();
  add_format(classify);

  std::string mu;
  auto* delta = app.add_subcommand("delta", "Drezet-Le Potier curve value and hosting exceptional slope");
  delta->add_option("mu", mu, "slope, e.g. 1/3 (use -- before negative values)")->required();
  add_format(delta);

  auto* extremal = app.add_subcommand("extremal", "extremal decomposition");
  extremal->add_option("character", character, char_help)->required();
  add_format(extremal);

  std::string svg_path;
  auto* wall = app.add_subcommand("wall", "Gieseker wall with certificate");
  wall->add_option("character", character, char_help)->required();
  wall->add_option("--svg", svg_path, "also write an SVG diagram to this path");
  wall->add_option("--nested", opts.nested_walls, "interior walls drawn in the SVG")->check(CLI::Range(0, 100));
  add_format(wall);

  std::uint64_t max_candidates = 0;
  auto* exclude = app.add_subcommand("exclude", "brute-force search for larger walls");
  exclude->add_option("character", character, char_help)->required();
  exclude->add_option("--max-candidates", max_candidates, "candidate budget (overrides P2WALLS_SEARCH_BUDGET)");
  add_format(exclude);

  auto* ample = app.add_subcommand("ample", "ample cone report");
  ample->add_option("character", character, char_help)->required();
  add_format(ample);

  int table = 0;
  auto* tables = app.add_subcommand("tables", "golden table regression");
  tables->require_subcommand(1);
  auto* verify = tables->add_subcommand("verify", "recompute a table and diff it against the golden rows");
  verify->add_option("--table", table, "table number")->required()->check(CLI::Range(1, 3));
  add_format(verify);

  long rank_min = 1, rank_max = 1;
  std::string slopes;
  int count = 1;
  auto* sweep = app.add_subcommand("sweep", "newline-delimited ample reports over a range of characters");
  auto* rank_opt = sweep->add_option("--rank", rank_min, "single rank");
  sweep->add_option("--rank-min", rank_min, "smallest rank")->excludes(rank_opt);
  sweep->add_option("--rank-max", rank_max, "largest rank")->excludes(rank_opt);
  sweep->add_option("--mu", slopes, "comma-separated slopes (default c1/r, c1 = 1..r)");
  sweep->add_option("--count", count, "lattice discriminants per column")->check(CLI::Range(0, 1000000));
  sweep->add_option("--decimals", opts.decimals, "places in decimal renderings")->check(CLI::Range(0, 30));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (want_json && want_text) {
    std::fprintf(stderr, "p2walls: --json and --text are mutually exclusive\n");
    return 2;
  }
  opts.text = want_text ? 1 : 0;

  if (classify->parsed())
    return with_char(character, [&](p2w_char* c, p2w_result** r) { return p2w_classify(c, &opts, r); });
  if (delta->parsed()) {
    ResultHandle res;
    return finish(p2w_delta(mu.c_str(), &opts, &res.ptr), res);
  }
  if (extremal->parsed())
    return with_char(character, [&](p2w_char* c, p2w_result** r) { return p2w_extremal(c, &opts, r); });
  if (wall->parsed()) {
    return with_char(character, [&](p2w_char* c, p2w_result** r) {
      if (!svg_path.empty()) {
        ResultHandle svg;
        p2w_status st = p2w_wall_svg(c, &opts, &svg.ptr);
        if (st != P2W_OK) return st;
        std::ofstream out(svg_path, std::ios::binary);
        out << p2w_result_text(svg.ptr);
        if (!out) {
          std::fprintf(stderr, "p2walls: cannot write %s\n", svg_path.c_str());
          return P2W_INVALID_ARGUMENT;
        }
      }
      return p2w_wall(c, &opts, r);
    });
  }
  if (exclude->parsed()) {
    opts.max_candidates = budget_from_env(opts.max_candidates);
    if (exclude->count("--max-candidates")) opts.max_candidates = max_candidates;
    return with_char(character, [&](p2w_char* c, p2w_result** r) { return p2w_exclude(c, &opts, r); });
  }
  if (ample->parsed())
    return with_char(character, [&](p2w_char* c, p2w_result** r) { return p2w_ample(c, &opts, r); });
  if (verify->parsed()) {
    ResultHandle res;
    return finish(p2w_tables_verify(table, &opts, &res.ptr), res);
  }
  if (sweep->parsed()) {
    if (sweep->count("--rank")) rank_max = rank_min;
    ResultHandle res;
    return finish(p2w_sweep(rank_min, rank_max, slopes.c_str(), count, &opts, &res.ptr), res);
  }
  return 2;
}
