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
#include "p2walls/chern.hpp"

#include "p2walls/error.hpp"

namespace p2walls {

namespace {

Rat half_c1_sq(const Integer& c1) { return Rat(Integer(c1 * c1), Integer(2)); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view text) {
  Rat v = Rat::parse(trim(text));
  if (!v.is_integer()) throw Error(ErrorCode::ParseError, "expected an integer, got '" + std::string(text) + "'");
  return v.num();
}

}  // namespace

ChernChar ChernChar::integral(Integer rank, Integer first, Rat second) {
  ChernChar xi(std::move(rank), std::move(first), std::move(second));
  if (xi.is_zero()) throw Error(ErrorCode::NotIntegral, "the zero class is not a character");
  if (!(Rat(2) * xi.ch2).is_integer())
    throw Error(ErrorCode::NotIntegral, "2*ch2 must be an integer in " + xi.str());
  if (!(xi.ch2 - half_c1_sq(xi.c1)).is_integer())
    throw Error(ErrorCode::NotIntegral, "c2 = c1^2/2 - ch2 must be an integer in " + xi.str());
  return xi;
}

bool ChernChar::is_integral() const {
  return !is_zero() && (Rat(2) * ch2).is_integer() && (ch2 - half_c1_sq(c1)).is_integer();
}

Rat ChernChar::slope() const {
  if (r == 0) throw Error(ErrorCode::NonPositiveRank, "slope of a rank-0 class");
  return Rat(c1, r);
}

Rat ChernChar::discriminant() const {
  Rat mu = slope();
  return mu * mu / Rat(2) - ch2 / Rat(r);
}

std::string ChernChar::str() const { return r.get_str() + "," + c1.get_str() + "," + ch2.str(); }

std::string ChernChar::str_invariant() const {
  if (r <= 0) return str();
  return r.get_str() + ":" + slope().str() + ":" + discriminant().str();
}

SlopeDisc invariants(const ChernChar& xi) {
  if (xi.r <= 0) throw Error(ErrorCode::NonPositiveRank, "rank must be positive, got " + xi.r.get_str());
  return {xi.slope(), xi.discriminant()};
}

ChernChar from_invariants(const Integer& r, const Rat& mu, const Rat& disc) {
  if (r <= 0) throw Error(ErrorCode::NonPositiveRank, "rank must be positive, got " + r.get_str());
  Rat c1 = Rat(r) * mu;
  if (!c1.is_integer())
    throw Error(ErrorCode::NotIntegral, "r*mu = " + c1.str() + " is not an integer");
  Rat ch2 = Rat(r) * (mu * mu / Rat(2) - disc);
  return ChernChar::integral(r, c1.num(), ch2);
}

ChernChar parse_character(std::string_view text) {
  text = trim(text);
  const bool invariant_form = text.find(':') != std::string_view::npos;
  const char sep = invariant_form ? ':' : ',';
  std::string_view parts[3];
  std::string_view rest = text;
  for (int i = 0; i < 3; ++i) {
    auto pos = rest.find(sep);
    if (i < 2) {
      if (pos == std::string_view::npos)
        throw Error(ErrorCode::ParseError, "expected 'r,c1,ch2' or 'r:mu:Delta', got '" + std::string(text) + "'");
      parts[i] = rest.substr(0, pos);
      rest.remove_prefix(pos + 1);
    } else {
      if (pos != std::string_view::npos)
        throw Error(ErrorCode::ParseError, "too many fields in '" + std::string(text) + "'");
      parts[i] = rest;
    }
  }
  Integer r = parse_integer(parts[0]);
  if (invariant_form) return from_invariants(r, Rat::parse(trim(parts[1])), Rat::parse(trim(parts[2])));
  return ChernChar::integral(r, parse_integer(parts[1]), Rat::parse(trim(parts[2])));
}

Rat hilbert_p(const Rat& m) { return (m * m + Rat(3) * m + Rat(2)) / Rat(2); }

Rat euler_char(const ChernChar& xi) { return Rat(xi.r) + Rat(3, 2) * Rat(xi.c1) + xi.ch2; }

ChernChar char_product(const ChernChar& a, const ChernChar& b) {
  return {Integer(a.r * b.r), Integer(a.r * b.c1 + b.r * a.c1),
          Rat(a.r) * b.ch2 + Rat(Integer(a.c1 * b.c1)) + Rat(b.r) * a.ch2};
}

Rat euler_pair(const ChernChar& xi, const ChernChar& zeta) {
  return euler_char(char_product(detail::dual(xi), zeta));
}

Rat sym_pair(const ChernChar& xi, const ChernChar& zeta) { return euler_char(char_product(xi, zeta)); }

ChernChar twist(const ChernChar& xi, const Integer& n) {
  return {xi.r, Integer(xi.c1 + n * xi.r),
          xi.ch2 + Rat(Integer(n * xi.c1)) + Rat(Integer(n * n * xi.r), Integer(2))};
}

ChernChar elem_mod(const ChernChar& xi, const Integer& k) {
  if (xi.r <= 0) throw Error(ErrorCode::NonPositiveRank, "elementary modification needs positive rank");
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "modification count must be nonnegative");
  return {xi.r, xi.c1, xi.ch2 - Rat(k)};
}

bool DiscLattice::contains(const Rat& x) const { return ((x - base) / step).is_integer(); }

Rat DiscLattice::at_least(const Rat& x) const { return base + Rat(((x - base) / step).ceil()) * step; }

Rat DiscLattice::above(const Rat& x) const {
  Rat v = at_least(x);
  return v == x ? v + step : v;
}

DiscLattice disc_lattice(const Integer& r, const Integer& c1) {
  if (r <= 0) throw Error(ErrorCode::NonPositiveRank, "rank must be positive, got " + r.get_str());
  Rat step(Integer(1), r);
  Rat raw = Rat(Integer(c1 * c1), Integer(2 * r)) * (step - Rat(1));
  Rat base = raw - Rat((raw / step).floor()) * step;
  return {base, step};
}

namespace detail {
ChernChar dual(const ChernChar& xi) { return {xi.r, Integer(-xi.c1), xi.ch2}; }
}  // namespace detail

}  // namespace p2walls
