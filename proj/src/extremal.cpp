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
#include "p2walls/extremal.hpp"

#include <numeric>

#include "p2walls/error.hpp"
#include "p2walls/exactmath.hpp"
#include "p2walls/exceptional.hpp"

namespace p2walls {

namespace {

bool predecessor_admissible(const ChernChar& sub, const ChernChar& whole) {
  if (whole.r <= 0) return false;
  ChernChar prev{whole.r, whole.c1, whole.ch2 + Rat(1)};
  if (!classify(prev).stable()) return false;
  return Decomposition::evaluate(sub, prev).admissible;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

}  // namespace

std::string_view stability_class_name(StabilityClass c) {
  switch (c) {
    case StabilityClass::NotSemistable: return "NotSemistable";
    case StabilityClass::Exceptional: return "Exceptional";
    case StabilityClass::SemiExceptional: return "SemiExceptional";
    case StabilityClass::HeightZero: return "HeightZero";
    case StabilityClass::PositiveHeight: return "PositiveHeight";
  }
  return "?";
}

std::string_view curve_tag_name(CurveTag t) {
  switch (t) {
    case CurveTag::Standard: return "Standard";
    case CurveTag::Sporadic2: return "Sporadic2";
    case CurveTag::Special5: return "Special5";
  }
  return "?";
}

Classification classify(const ChernChar& xi) {
  auto [mu, disc] = invariants(xi);
  ExcSlope home = containing_exceptional(mu);
  Classification c;
  c.mu = mu;
  c.disc = disc;
  c.delta = hilbert_p(-(mu - home.alpha).abs()) - home.disc;
  if (home.alpha == mu && disc == home.disc) {
    c.kind = xi.r == home.rank ? StabilityClass::Exceptional : StabilityClass::SemiExceptional;
  } else if (disc > c.delta) {
    c.kind = StabilityClass::PositiveHeight;
  } else if (disc == c.delta) {
    c.kind = StabilityClass::HeightZero;
  } else {
    c.kind = StabilityClass::NotSemistable;
  }
  return c;
}

bool is_stable_character(const ChernChar& xi) {
  if (xi.r < 0) return false;
  if (xi.r == 0) return xi.c1 > 0;
  return classify(xi).stable();
}

bool is_semistable_character(const ChernChar& xi) {
  if (xi.r < 0) return false;
  if (xi.r == 0) return xi.c1 > 0;
  return classify(xi).semistable();
}

void require_positive_height(const ChernChar& xi) {
  Classification c = classify(xi);
  switch (c.kind) {
    case StabilityClass::PositiveHeight: return;
    case StabilityClass::NotSemistable:
      throw Error(ErrorCode::NotSemistableInput, xi.str_invariant() + " is not semistable (Delta < delta(mu))");
    default:
      throw Error(ErrorCode::HeightZeroInput,
                  xi.str_invariant() + " is " + std::string(stability_class_name(c.kind)) +
                      "; its ample cone is spanned by a single generator");
  }
}

Rat moduli_dimension(const ChernChar& xi) {
  auto [mu, disc] = invariants(xi);
  return Rat(Integer(xi.r * xi.r)) * (Rat(2) * disc - Rat(1)) + Rat(1);
}

StableDisc min_stable_disc(const Rat& mu, const Integer& rmax) {
  const Integer den = mu.den();
  if (den > rmax)
    throw Error(ErrorCode::NoStableCharacter,
                "no character of slope " + mu.str() + " has rank <= " + rmax.get_str());
  const Rat curve = delta(mu);
  StableDisc best{Rat(0), Integer(0)};
  bool have = false;
  if (is_exceptional_slope(mu)) {
    best = {exc_slope(mu).disc, den};
    have = true;
  }
  for (Integer rr = den; rr <= rmax; rr += den) {
    Rat d = disc_lattice(rr, Integer(rr * mu.num() / den)).at_least(curve);
    if (!have || d < best.disc) {
      best = {d, rr};
      have = true;
    }
  }
  return best;
}

Decomposition Decomposition::evaluate(const ChernChar& sub, const ChernChar& whole) {
  Decomposition d;
  d.sub = sub;
  d.whole = whole;
  d.quotient = whole - sub;
  d.torsion = d.quotient.r == 0;
  {
    Integer g;
    mpz_gcd(g.get_mpz_t(), whole.r.get_mpz_t(), whole.c1.get_mpz_t());
    d.coprime = g == 1;
  }
  if (!is_semistable_character(sub)) d.failed.push_back("D1");
  if (!is_stable_character(d.quotient)) d.failed.push_back("D2");
  if (!(sub.r > 0 && sub.r <= whole.r)) d.failed.push_back("D3");
  if (!(sub.r > 0 && whole.r > 0 && sub.slope() < whole.slope())) d.failed.push_back("D4");
  if (d.quotient.r > 0 && sub.r > 0 && !(d.quotient.slope() - sub.slope() < Rat(3))) d.failed.push_back("D5");
  d.admissible = d.failed.empty();
  return d;
}

Decomposition extremal_triple(const ChernChar& xi) {
  auto [mu, disc] = invariants(xi);
  Rat mu_sub = farey_pred(mu, xi.r);
  StableDisc sd = min_stable_disc(mu_sub, xi.r);
  ChernChar sub = from_invariants(sd.rank, mu_sub, sd.disc);
  Decomposition d = Decomposition::evaluate(sub, xi);
  if (!d.admissible)
    throw Error(ErrorCode::AdmissibilityFailed,
                "extremal triple of " + xi.str_invariant() + " fails " + join(d.failed));
  d.extremal = true;
  d.minimal = !predecessor_admissible(sub, xi);
  return d;
}

Decomposition minimal_triple(const Integer& r, const Rat& mu, int ceiling) {
  if (r <= 0) throw Error(ErrorCode::NonPositiveRank, "rank must be positive");
  if (mu.den() > r) throw Error(ErrorCode::InvalidArgument, "slope " + mu.str() + " is not a rank-" + r.get_str() + " slope");
  const Integer c1 = r * mu.num() / mu.den();
  const DiscLattice lattice = disc_lattice(r, c1);
  const Rat curve = delta(mu);
  Rat d = (is_exceptional_slope(mu) && r == mu.den()) ? exc_slope(mu).disc : lattice.at_least(curve);
  for (int step = 0; step < ceiling; ++step) {
    ChernChar xi = from_invariants(r, mu, d);
    if (classify(xi).stable()) {
      try {
        return extremal_triple(xi);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::AdmissibilityFailed) throw;
      }
    }
    d = d < curve ? lattice.at_least(curve) : d + lattice.step;
  }
  throw Error(ErrorCode::NoAdmissible,
              "no admissible extremal triple for rank " + r.get_str() + ", slope " + mu.str() + " within the search ceiling");
}

Integer unit_shift(const Rat& mu) { return Integer(mu.ceil() - 1); }

ChernChar special_character() { return ChernChar::integral(6, 2, Rat(-4)); }

ChernChar sporadic_character(const Integer& r) {
  Rat inv(Integer(1), r);
  return from_invariants(r, inv, hilbert_p(-inv) + inv);
}

bool is_special_twist(const ChernChar& xi) {
  if (xi.r != 6) return false;
  return twist(xi, Integer(-unit_shift(xi.slope()))) == special_character();
}

int sporadic_rank(const ChernChar& xi) {
  if (xi.r < 2 || xi.r > 6) return 0;
  ChernChar base = twist(xi, Integer(-unit_shift(xi.slope())));
  return base == sporadic_character(xi.r) ? static_cast<int>(xi.r.get_si()) : 0;
}

CurveWitness curve_decomposition(const ChernChar& xi) {
  require_positive_height(xi);
  const Integer n = unit_shift(xi.slope());
  CurveWitness w;
  if (is_special_twist(xi)) {
    w.decomposition = Decomposition::evaluate(twist(ChernChar(5, 0, Rat(0)), n), xi);
    w.tag = CurveTag::Special5;
  } else {
    Decomposition d = extremal_triple(xi);
    Rat chi = euler_pair(d.sub, d.quotient);
    if (chi.sign() > 0) {
      if (sporadic_rank(xi) == 0)
        throw Error(ErrorCode::UnexpectedPositiveChi,
                    "chi(xi', xi'') = " + chi.str() + " > 0 for " + xi.str_invariant() +
                        ", which is not a sporadic character");
      w.decomposition = Decomposition::evaluate(twist(ChernChar(2, 0, Rat(0)), n), xi);
      w.tag = CurveTag::Sporadic2;
    } else {
      w.decomposition = std::move(d);
      w.tag = CurveTag::Standard;
    }
  }
  w.chi = euler_pair(w.decomposition.sub, w.decomposition.quotient);
  return w;
}

ChiChainEntry chi_chain(const Integer& r, const Rat& mu) {
  ChiChainEntry e;
  e.decomposition = minimal_triple(r, mu);
  for (int step = 0; step < kMinimalSearchCeiling; ++step) {
    e.chi = euler_pair(e.decomposition.sub, e.decomposition.quotient);
    if (e.chi.sign() <= 0) return e;
    e.decomposition = extremal_triple(elem_mod(e.decomposition.whole, Integer(1)));
    e.steps = step + 1;
  }
  throw Error(ErrorCode::NoAdmissible, "chi chain did not reach chi <= 0");
}

}  // namespace p2walls
