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
#include "p2walls/walls.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "p2walls/exceptional.hpp"

namespace p2walls {

namespace {

bool proportional(const ChernChar& a, const ChernChar& b) {
  // Cross product of (r, c1, ch2) vectors vanishes.
  return Rat(a.r) * Rat(b.c1) == Rat(a.c1) * Rat(b.r) && Rat(a.r) * b.ch2 == a.ch2 * Rat(b.r) &&
         Rat(a.c1) * b.ch2 == a.ch2 * Rat(b.c1);
}

struct CellResult {
  std::vector<ChernChar> violations;
  std::uint64_t examined = 0;
  bool exhausted = false;
};

CellResult search_rank(const ChernChar& xi, const Rat& mu, const QuadVal& x_plus, const Rat& target,
                       const Integer& rk, std::uint64_t budget) {
  CellResult out;
  Integer c1(std::floor((x_plus * Rat(rk)).approx()) - 1.0);
  for (; Rat(c1, rk) < mu; ++c1) {
    const Rat mu1(c1, rk);
    if (quad_cmp(x_plus, QuadVal(mu1)) >= 0) continue;
    std::vector<Rat> discs;
    const ExcSlope home = containing_exceptional(mu1);
    const bool semi = home.alpha == mu1 && rk % home.rank == 0;
    if (semi) discs.push_back(home.disc);
    const DiscLattice lattice = disc_lattice(rk, c1);
    Rat next = lattice.at_least(delta(mu1));
    // The wall of theta' with xi shrinks as Delta(theta') grows, so each
    // (rank, c1) cell stops at the first candidate that is not larger.
    for (size_t i = 0;; ++i) {
      Rat d;
      if (i < discs.size()) {
        d = discs[i];
      } else {
        d = next;
        next += lattice.step;
      }
      if (++out.examined > budget) {
        out.exhausted = true;
        return out;
      }
      ChernChar theta = from_invariants(rk, mu1, d);
      Wall w = potential_wall(theta, xi);
      if (w.kind == WallKind::Semicircle && w.center < mu && w.radius_sq > target) {
        out.violations.push_back(theta);
      } else {
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::string_view wall_kind_name(WallKind k) {
  switch (k) {
    case WallKind::Vertical: return "Vertical";
    case WallKind::Semicircle: return "Semicircle";
    case WallKind::Empty: return "Empty";
  }
  return "?";
}

std::string_view certificate_name(Certificate c) {
  switch (c) {
    case Certificate::ProvedSmallRank: return "ProvedSmallRank";
    case Certificate::ProvedSpecial: return "ProvedSpecial";
    case Certificate::UpperBoundPlusHomAssumption: return "UpperBoundPlusHomAssumption";
    case Certificate::Heuristic: return "Heuristic";
  }
  return "?";
}

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
    case CheckStatus::Assumed: return "Assumed";
  }
  return "?";
}

QuadVal Wall::x_plus() const {
  if (kind != WallKind::Semicircle) throw Error(ErrorCode::InvalidArgument, "endpoints exist only for semicircles");
  return QuadVal(center, radius_sq, 1);
}

QuadVal Wall::x_minus() const {
  if (kind != WallKind::Semicircle) throw Error(ErrorCode::InvalidArgument, "endpoints exist only for semicircles");
  return QuadVal(center, radius_sq, -1);
}

Wall potential_wall(const ChernChar& a, const ChernChar& b) {
  if (a.is_zero() || b.is_zero() || proportional(a, b))
    throw Error(ErrorCode::DependentCharacters, a.str() + " and " + b.str() + " are linearly dependent");
  if (a.r == 0 && b.r == 0) return Wall{};
  // W(xi, zeta) = W(xi, xi + zeta) removes rank-0 arguments.
  const ChernChar first = a.r == 0 ? a + b : a;
  const ChernChar second = b.r == 0 ? a + b : b;
  const Rat mu1 = first.slope(), mu2 = second.slope();
  if (mu1 == mu2) return Wall::vertical(mu1);
  const Rat d1 = first.discriminant(), d2 = second.discriminant();
  Wall w;
  w.has_center = true;
  w.center = (mu1 + mu2) / Rat(2) - (d1 - d2) / (mu1 - mu2);
  w.radius_sq = (w.center - mu1) * (w.center - mu1) - Rat(2) * d1;
  w.kind = w.radius_sq.sign() > 0 ? WallKind::Semicircle : WallKind::Empty;
  return w;
}

Rat central_charge_re(const ChernChar& eta, const Rat& s, const Rat& t_sq) {
  return -(eta.ch2 - s * Rat(eta.c1) + (s * s - t_sq) * Rat(eta.r) / Rat(2));
}

Rat central_charge_im_over_t(const ChernChar& eta, const Rat& s) { return Rat(eta.c1) - s * Rat(eta.r); }

bool on_wall(const ChernChar& xi, const ChernChar& zeta, const Rat& s, const Rat& t_sq) {
  if (t_sq.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "t^2 must be positive");
  return central_charge_re(xi, s, t_sq) * central_charge_im_over_t(zeta, s) ==
         central_charge_re(zeta, s, t_sq) * central_charge_im_over_t(xi, s);
}

Rat rank_bound_radius_sq(const ChernChar& xi) {
  auto [mu, disc] = invariants(xi);
  return Rat(Integer(xi.r * xi.r)) * disc / Rat(Integer(2 * (xi.r + 1)));
}

QuadVal delta_one(const Integer& r, const Rat& mu) {
  if (r <= 0) throw Error(ErrorCode::NonPositiveRank, "rank must be positive");
  const Rat mu_sub = farey_pred(mu, r);
  const StableDisc sd = min_stable_disc(mu_sub, r);
  // With gap g = mu - mu', the wall radius is
  //   rho^2 = (Delta - Delta' + g^2/2)^2 / g^2 - 2 Delta,
  // so rho^2 = k Delta is a A Delta^2 + B Delta + C = 0 quadratic.
  const Rat gap = mu - mu_sub;
  const Rat inv_sq = Rat(1) / (gap * gap);
  const Rat k = Rat(Integer(r * r)) / Rat(Integer(2 * (r + 1)));
  const Rat e = gap * gap / Rat(2) - sd.disc;
  const Rat a = inv_sq;
  const Rat b = Rat(2) * inv_sq * e - (Rat(2) + k);
  const Rat c = inv_sq * e * e;
  const Rat disc = b * b - Rat(4) * a * c;
  if (disc.sign() < 0)
    throw Error(ErrorCode::NoRoot, "no real root for rank " + r.get_str() + ", slope " + mu.str());
  return QuadVal(-b / (Rat(2) * a), disc / (Rat(4) * a * a), 1);
}

GiesekerReport gieseker_wall(const ChernChar& xi) {
  require_positive_height(xi);
  GiesekerReport g;
  const bool special = is_special_twist(xi);
  if (special) {
    g.decomposition = curve_decomposition(xi).decomposition;
  } else {
    g.decomposition = extremal_triple(xi);
  }
  g.destabilizer = g.decomposition.sub;
  g.wall = potential_wall(g.destabilizer, xi);
  if (g.wall.kind != WallKind::Semicircle)
    throw Error(ErrorCode::EmptyGiesekerWall,
                "the wall of " + g.destabilizer.str_invariant() + " and " + xi.str_invariant() + " is " +
                    std::string(wall_kind_name(g.wall.kind)));

  const bool quotient_stable = is_stable_character(g.decomposition.quotient);
  const bool radius_ok = g.wall.radius_sq >= rank_bound_radius_sq(xi);
  const bool gap_ok = quad_cmp(QuadVal(farey_pred(g.destabilizer.slope(), xi.r)), g.wall.x_plus()) < 0;
  auto status = [](bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; };
  g.checks = {
      {"1", "quotient_stable", status(quotient_stable)},
      {"2", "extensions_give_curves", CheckStatus::Assumed},
      {"3", "rank_bound", status(radius_ok)},
      {"4", "farey_gap", status(gap_ok)},
  };

  if (special) {
    g.certificate = Certificate::ProvedSpecial;
  } else if (xi.r <= 6) {
    g.certificate = Certificate::ProvedSmallRank;
  } else if (g.decomposition.coprime && quotient_stable && radius_ok && gap_ok) {
    g.certificate = Certificate::UpperBoundPlusHomAssumption;
  } else {
    g.certificate = Certificate::Heuristic;
  }
  return g;
}

ExclusionResult exclusion_search(const ChernChar& xi, const Wall& wall, std::uint64_t budget) {
  if (wall.kind != WallKind::Semicircle)
    throw Error(ErrorCode::InvalidArgument, "exclusion search needs a nonempty semicircular wall");
  const Rat mu = invariants(xi).mu;
  const QuadVal x_plus = wall.x_plus();

  std::vector<std::future<CellResult>> jobs;
  for (Integer rk = 1; rk <= xi.r; ++rk)
    jobs.push_back(std::async(std::launch::async, search_rank, std::cref(xi), std::cref(mu), std::cref(x_plus),
                              std::cref(wall.radius_sq), rk, budget));

  ExclusionResult result;
  bool exhausted = false;
  for (auto& job : jobs) {
    CellResult cell = job.get();
    result.examined += cell.examined;
    exhausted = exhausted || cell.exhausted;
    for (auto& v : cell.violations) result.violations.push_back(std::move(v));
  }
  std::sort(result.violations.begin(), result.violations.end(), [](const ChernChar& a, const ChernChar& b) {
    if (a.r != b.r) return a.r < b.r;
    if (a.c1 != b.c1) return a.c1 < b.c1;
    return a.ch2 < b.ch2;
  });
  if (exhausted || result.examined > budget)
    throw SearchBudgetError("exclusion search exceeded its budget of " + std::to_string(budget) + " candidates",
                            std::move(result));
  return result;
}

}  // namespace p2walls
