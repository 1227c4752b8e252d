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
#include "p2walls/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "p2walls/ample.hpp"
#include "p2walls/exceptional.hpp"
#include "p2walls/extremal.hpp"
#include "p2walls/tables.hpp"

namespace p2walls {

using Json = nlohmann::ordered_json;

namespace {

Json rat_json(const Rat& x) { return x.str(); }

Json quad_json(const QuadVal& x, int places) {
  Json j;
  j["exact"] = x.str();
  j["rational_part"] = x.rational_part().str();
  j["radicand"] = x.radicand().str();
  j["root_sign"] = x.root_sign() > 0 ? "1" : "-1";
  j["decimal"] = decimal(x, places);
  return j;
}

Json char_json(const ChernChar& xi) {
  Json j;
  j["text"] = xi.str();
  j["r"] = xi.r.get_str();
  j["c1"] = xi.c1.get_str();
  j["ch2"] = xi.ch2.str();
  if (xi.r != 0) {
    j["mu"] = xi.slope().str();
    j["disc"] = xi.discriminant().str();
  } else {
    j["mu"] = nullptr;
    j["disc"] = nullptr;
  }
  return j;
}

Json wall_json(const Wall& w, int places) {
  Json j;
  j["kind"] = std::string(wall_kind_name(w.kind));
  j["center"] = w.has_center ? Json(w.center.str()) : Json(nullptr);
  j["radius_sq"] = (w.has_center && w.kind != WallKind::Vertical) ? Json(w.radius_sq.str()) : Json(nullptr);
  if (w.kind == WallKind::Semicircle) {
    j["x_plus"] = quad_json(w.x_plus(), places);
    j["x_minus"] = quad_json(w.x_minus(), places);
  } else {
    j["x_plus"] = nullptr;
    j["x_minus"] = nullptr;
  }
  return j;
}

Json decomposition_json(const Decomposition& d) {
  Json j;
  j["sub"] = char_json(d.sub);
  j["whole"] = char_json(d.whole);
  j["quotient"] = char_json(d.quotient);
  j["admissible"] = d.admissible;
  j["extremal"] = d.extremal;
  j["torsion"] = d.torsion;
  j["coprime"] = d.coprime;
  j["minimal"] = d.minimal;
  j["failed"] = d.failed;
  return j;
}

Json witness_json(const CurveWitness& w) {
  Json j;
  j["tag"] = std::string(curve_tag_name(w.tag));
  j["chi"] = rat_json(w.chi);
  j["decomposition"] = decomposition_json(w.decomposition);
  return j;
}

Json gieseker_json(const ChernChar& xi, const GiesekerReport& g, int places) {
  Json j;
  j["wall"] = wall_json(g.wall, places);
  j["destabilizer"] = char_json(g.destabilizer);
  j["decomposition"] = decomposition_json(g.decomposition);
  j["certificate"] = std::string(certificate_name(g.certificate));
  Json checks = Json::array();
  for (const auto& c : g.checks)
    checks.push_back({{"id", c.id}, {"name", c.name}, {"status", std::string(check_status_name(c.status))}});
  j["checks"] = checks;
  j["rank_bound_radius_sq"] = rat_json(rank_bound_radius_sq(xi));
  return j;
}

Json ample_json(const AmpleReport& a, int places) {
  Json j;
  j["command"] = "ample";
  j["character"] = char_json(a.xi);
  j["moduli_dim"] = rat_json(a.moduli_dim);
  j["u1_ray"] = char_json(a.u1_ray);
  j["primary_ray"] = char_json(a.primary_ray);
  j["gieseker"] = gieseker_json(a.xi, a.gieseker, places);
  j["curve_witness"] = witness_json(a.curve_witness);
  j["singular_locus_empty"] = a.singular_locus_empty;
  j["duy_edge"] = a.duy_edge;
  j["dual_convention"] = {{"u1_ray", char_json(a.u1_ray_dual)}, {"primary_ray", char_json(a.primary_ray_dual)}};
  return j;
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out += prefix + ": []\n";
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

std::string emit(const Json& j, const RenderOptions& opts) {
  if (!opts.text) return j.dump(2) + "\n";
  std::string out;
  flatten(j, "", out);
  return out;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_classify(const ChernChar& xi, const RenderOptions& opts) {
  const Classification c = classify(xi);
  Json j;
  j["command"] = "classify";
  j["character"] = char_json(xi);
  j["class"] = std::string(stability_class_name(c.kind));
  j["delta"] = rat_json(c.delta);
  j["height"] = rat_json(c.height());
  j["stable"] = c.stable();
  j["semistable"] = c.semistable();
  j["moduli_dim"] = rat_json(moduli_dimension(xi));
  return emit(j, opts);
}

std::string render_delta(const Rat& mu, const RenderOptions& opts) {
  const ExcSlope home = containing_exceptional(mu);
  const Rat d = delta(mu);
  Json j;
  j["command"] = "delta";
  j["mu"] = rat_json(mu);
  j["delta"] = rat_json(d);
  j["delta_decimal"] = decimal(d, opts.decimals);
  j["exceptional"] = home.alpha == mu;
  j["alpha"] = rat_json(home.alpha);
  j["rank_alpha"] = home.rank.get_str();
  j["disc_alpha"] = rat_json(home.disc);
  j["x_alpha"] = quad_json(home.half_width, opts.decimals);
  return emit(j, opts);
}

std::string render_extremal(const ChernChar& xi, const RenderOptions& opts) {
  const Decomposition d = extremal_triple(xi);
  Json j;
  j["command"] = "extremal";
  j["character"] = char_json(xi);
  j["decomposition"] = decomposition_json(d);
  j["chi"] = rat_json(euler_pair(d.sub, d.quotient));
  j["wall"] = wall_json(potential_wall(d.sub, xi), opts.decimals);
  return emit(j, opts);
}

std::string render_wall(const ChernChar& xi, const RenderOptions& opts) {
  const GiesekerReport g = gieseker_wall(xi);
  Json j;
  j["command"] = "wall";
  j["character"] = char_json(xi);
  const Json body = gieseker_json(xi, g, opts.decimals);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return emit(j, opts);
}

std::string render_wall_svg(const ChernChar& xi, const RenderOptions& opts) {
  const GiesekerReport g = gieseker_wall(xi);
  const auto [mu_r, disc_r] = invariants(xi);
  const double center = g.wall.center.to_double();
  const double rho = std::sqrt(g.wall.radius_sq.to_double());
  const double mu = mu_r.to_double();
  const double disc = disc_r.to_double();

  const double s_min = center - 1.5 * rho;
  const double s_max = mu + 0.5;
  const double width = 800.0, margin = 40.0;
  const double scale = (width - 2 * margin) / (s_max - s_min);
  const double height = 2 * margin + 1.2 * rho * scale;
  const double base = height - margin;
  auto sx = [&](double s) { return margin + (s - s_min) * scale; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
         "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  out += "  <title>Gieseker wall of " + xi.str_invariant() + "</title>\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) + "\" fill=\"white\"/>\n";
  out += "  <line id=\"s-axis\" x1=\"" + fmt(margin) + "\" y1=\"" + fmt(base) + "\" x2=\"" + fmt(width - margin) +
         "\" y2=\"" + fmt(base) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "  <line id=\"vertical-wall\" x1=\"" + fmt(sx(mu)) + "\" y1=\"" + fmt(base) + "\" x2=\"" + fmt(sx(mu)) +
         "\" y2=\"" + fmt(margin / 2) + "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  auto arc = [&](const std::string& id, double c, double r, const std::string& style) {
    return "  <path id=\"" + id + "\" d=\"M " + fmt(sx(c - r)) + " " + fmt(base) + " A " + fmt(r * scale) + " " +
           fmt(r * scale) + " 0 0 1 " + fmt(sx(c + r)) + " " + fmt(base) + "\" fill=\"none\" " + style + "/>\n";
  };
  out += arc("gieseker-wall", center, rho, "stroke=\"crimson\" stroke-width=\"2\"");

  // Interior walls of the nested family left of the vertical wall: centers
  // between the Gieseker center and mu - sqrt(2 Delta).
  const double limit = mu - std::sqrt(2.0 * disc);
  for (int k = 1; k <= opts.nested_walls; ++k) {
    const double c = center + (limit - center) * k / (opts.nested_walls + 1);
    const double r2 = (c - mu) * (c - mu) - 2.0 * disc;
    if (r2 <= 0) continue;
    out += arc("nested-" + std::to_string(k), c, std::sqrt(r2), "stroke=\"steelblue\" stroke-width=\"1\"");
  }
  out += "  <text x=\"" + fmt(sx(mu)) + "\" y=\"" + fmt(base + 16) + "\" font-size=\"12\" text-anchor=\"middle\">mu=" +
         mu_r.str() + "</text>\n";
  out += "  <text x=\"" + fmt(sx(center)) + "\" y=\"" + fmt(base + 16) +
         "\" font-size=\"12\" text-anchor=\"middle\">s=" + g.wall.center.str() + "</text>\n";
  out += "  <text x=\"" + fmt(sx(center + rho)) + "\" y=\"" + fmt(base + 30) +
         "\" font-size=\"12\" text-anchor=\"middle\">x+=" + decimal(g.wall.x_plus(), opts.decimals) + "</text>\n";
  out += "</svg>\n";
  return out;
}

Rendered render_exclude(const ChernChar& xi, const RenderOptions& opts) {
  const GiesekerReport g = gieseker_wall(xi);
  Json j;
  j["command"] = "exclude";
  j["character"] = char_json(xi);
  j["wall"] = wall_json(g.wall, opts.decimals);
  j["destabilizer"] = char_json(g.destabilizer);
  j["budget"] = opts.max_candidates;
  Rendered r;
  ExclusionResult res;
  try {
    res = exclusion_search(xi, g.wall, opts.max_candidates);
    j["complete"] = true;
  } catch (const SearchBudgetError& e) {
    res = e.partial();
    j["complete"] = false;
    r.outcome = RenderOutcome::BudgetExceeded;
  }
  j["examined"] = res.examined;
  Json v = Json::array();
  for (const auto& c : res.violations) v.push_back(char_json(c));
  j["violations"] = v;
  if (r.outcome == RenderOutcome::Ok && !res.violations.empty()) r.outcome = RenderOutcome::NonemptyExclusion;
  r.body = emit(j, opts);
  return r;
}

std::string render_ample(const ChernChar& xi, const RenderOptions& opts) {
  return emit(ample_json(ample_cone(xi), opts.decimals), opts);
}

Rendered render_tables(int which, const RenderOptions& opts) {
  const TableReport t = tables_verify(which);
  Rendered r;
  r.outcome = t.ok() ? RenderOutcome::Ok : RenderOutcome::TableMismatch;
  if (opts.text) {
    std::string out = "table " + std::to_string(which) + ": " + std::to_string(t.matched) + "/" +
                      std::to_string(t.rows) + " rows match\n";
    for (const auto& c : t.checks) {
      out += (c.match ? "  ok    " : "  FAIL  ") + std::string("row ") + std::to_string(c.row) + "\n";
      out += "        golden:   " + c.expected + "\n";
      out += "        computed: " + c.computed + "\n";
      for (const auto& n : c.notes) out += "        note: " + n + "\n";
    }
    for (const auto& e : t.extra) out += "  EXTRA " + e + "\n";
    r.body = out;
    return r;
  }
  Json j;
  j["command"] = "tables";
  j["table"] = which;
  j["rows"] = t.rows;
  j["matched"] = t.matched;
  j["ok"] = t.ok();
  Json checks = Json::array();
  for (const auto& c : t.checks)
    checks.push_back({{"row", c.row}, {"expected", c.expected}, {"computed", c.computed}, {"match", c.match},
                      {"notes", c.notes}});
  j["checks"] = checks;
  j["extra"] = t.extra;
  r.body = j.dump(2) + "\n";
  return r;
}

std::vector<ChernChar> sweep_characters(const SweepSpec& spec) {
  std::vector<ChernChar> out;
  if (spec.count <= 0) return out;
  for (Integer r = spec.rank_min; r <= spec.rank_max; ++r) {
    if (r <= 0) continue;
    std::vector<Rat> slopes = spec.slopes;
    if (slopes.empty())
      for (Integer c1 = 1; c1 <= r; ++c1) slopes.emplace_back(c1, r);
    for (const Rat& mu : slopes) {
      if (r % mu.den() != 0) continue;
      const Integer c1 = (mu * Rat(r)).num();
      const DiscLattice lattice = disc_lattice(r, c1);
      Rat d = lattice.above(delta(mu));
      for (int k = 0; k < spec.count; ++k, d += lattice.step) out.push_back(from_invariants(r, mu, d));
    }
  }
  return out;
}

std::string render_sweep(const SweepSpec& spec, const RenderOptions& opts) {
  const std::vector<ChernChar> items = sweep_characters(spec);
  auto one = [&opts](const ChernChar& xi, size_t index) {
    Json j;
    j["index"] = index;
    j["input"] = xi.str_invariant();
    try {
      j["report"] = ample_json(ample_cone(xi), opts.decimals);
    } catch (const Error& e) {
      j["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    }
    return j.dump() + "\n";
  };
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) out += one(items[i], i);
  return out;
}

}  // namespace p2walls
