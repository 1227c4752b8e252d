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

#include <gtest/gtest.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <vector>

#include "p2walls/chern.hpp"
#include "p2walls/error.hpp"
#include "p2walls/exceptional.hpp"
#include "p2walls/extremal.hpp"
#include "p2walls/exactmath.hpp"

namespace p2walls {

inline void PrintTo(const ChernChar& c, std::ostream* os) { *os << c.str(); }
inline void PrintTo(const Rat& x, std::ostream* os) { *os << x.str(); }

}  // namespace p2walls

namespace p2walls::testing {

inline constexpr int kPropertyCases = 1000;

/// Code of the Error raised by f; records a failure when nothing is thrown.
inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed2u);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rat random_rat(long num_bound, long den_bound) {
  return Rat(Integer(uniform(-num_bound, num_bound)), Integer(uniform(1, den_bound)));
}

/// Random integral character of rank in [rmin, rmax] (rank 0 allowed when
/// rmin == 0, then c1 is forced nonzero or ch2 nonzero).
inline ChernChar random_char(long rmin, long rmax, long c1_bound = 20, long c2_bound = 20) {
  for (;;) {
    const Integer r(uniform(rmin, rmax));
    const Integer c1(uniform(-c1_bound, c1_bound));
    const Integer c2(uniform(-c2_bound, c2_bound));
    // ch2 = c1^2/2 - c2 keeps both lattice conditions.
    const Rat ch2 = Rat(Integer(c1 * c1), Integer(2)) - Rat(c2);
    ChernChar xi(r, c1, ch2);
    if (!xi.is_zero()) return xi;
  }
}

/// (r, mu, Delta) triple notation used throughout the tables.
inline ChernChar inv(long r, const Rat& mu, const Rat& disc) { return from_invariants(Integer(r), mu, disc); }

inline Rat q(long n, long d = 1) { return Rat(n, d); }

/// Brute-force Farey predecessor: scan every fraction with denominator <= n.
inline Rat farey_pred_oracle(const Rat& mu, long n) {
  Rat best = Rat(mu.floor()) - Rat(1);
  for (long b = 1; b <= n; ++b) {
    // Largest a/b < mu.
    Rat scaled = mu * Rat(b);
    Integer a = scaled.is_integer() ? Integer(scaled.num() - 1) : scaled.floor();
    Rat cand(a, Integer(b));
    if (cand > best) best = cand;
  }
  return best;
}

/// Closed Riemann-Roch form r1 r2 (P(mu2 - mu1) - Delta1 - Delta2).
inline Rat rr_closed_form(const ChernChar& a, const ChernChar& b) {
  const Rat mu1 = a.slope(), mu2 = b.slope();
  const Rat m = mu2 - mu1;
  const Rat p = (m * m + Rat(3) * m + Rat(2)) / Rat(2);
  return Rat(Integer(a.r * b.r)) * (p - a.discriminant() - b.discriminant());
}

/// Positive-height character of rank <= rmax, a few lattice steps above the
/// Drezet-Le Potier curve, never a twist of the special character.
inline ChernChar random_positive_height(long rmax, long max_steps = 6) {
  for (;;) {
    const long r = uniform(1, rmax);
    const long c1 = uniform(-3 * r, 3 * r);
    const Rat mu{Integer(c1), Integer(r)};
    const DiscLattice l = disc_lattice(Integer(r), Integer(c1));
    const Rat d = l.above(delta(mu)) + l.step * Rat(uniform(0, max_steps));
    ChernChar xi = from_invariants(Integer(r), mu, d);
    if (!is_special_twist(xi)) return xi;
  }
}

/// Printed rows of the Delta_0 / Delta_1 / x^+ table.
struct Table3Row {
  long r, mu_num, mu_den, d0_num, d0_den;
  double d1_printed, x_plus_printed;
};

inline const std::vector<Table3Row>& table3_rows() {
  static const std::vector<Table3Row> rows{
      {1, 1, 1, 2, 1, 1.00, 0},     {2, 1, 2, 7, 8, 0.25, 0},     {2, 1, 1, 3, 2, 1.11, 0.30},
      {3, 1, 3, 8, 9, 0.11, 0},     {3, 2, 3, 8, 9, 0.57, 0.37},  {3, 1, 1, 4, 3, 1.13, 0.39},
      {4, 1, 4, 29, 32, 0.06, 0},   {4, 1, 2, 7, 8, 0.81, 0},     {4, 3, 4, 29, 32, 0.67, 0.53},
      {4, 1, 1, 5, 4, 1.13, 0.44},  {5, 1, 5, 23, 25, 0.04, 0},   {5, 2, 5, 17, 25, 0.65, 0},
      {5, 3, 5, 17, 25, 0.48, 0.37}, {5, 4, 5, 23, 25, 0.73, 0.62}, {5, 1, 1, 6, 5, 1.13, 0.46},
      {6, 1, 6, 67, 72, 0.03, 0},   {6, 1, 3, 8, 9, 0.79, 0},     {6, 1, 2, 17, 24, 0.64, 0.17},
      {6, 2, 3, 13, 18, 0.58, 0.46}, {6, 5, 6, 67, 72, 0.78, 0.68}, {6, 1, 1, 7, 6, 1.13, 0.48},
  };
  return rows;
}

inline ChernChar table3_char(const Table3Row& row) {
  return inv(row.r, q(row.mu_num, row.mu_den), q(row.d0_num, row.d0_den));
}

}  // namespace p2walls::testing
