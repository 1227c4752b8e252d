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

#include <string>
#include <string_view>

#include "p2walls/error.hpp"
#include "p2walls/exactmath.hpp"

namespace p2walls {

/// Chern character (rank, c1, ch2) on the projective plane, c1 in hyperplane
/// units.
///
/// The plain constructor accepts any class with integral rank and c1 (this is
/// how ray classes and other rational K-theory classes are carried). Use
/// ChernChar::integral to obtain a validated character of an actual sheaf:
/// 2*ch2 and ch2 - c1^2/2 are integers and the triple is nonzero.
struct ChernChar {
  Integer r{0};
  Integer c1{0};
  Rat ch2{0};

  ChernChar() = default;
  ChernChar(Integer rank, Integer first, Rat second)
      : r(std::move(rank)), c1(std::move(first)), ch2(std::move(second)) {}

  static ChernChar integral(Integer rank, Integer first, Rat second);

  bool is_integral() const;
  bool is_zero() const { return r == 0 && c1 == 0 && ch2.sign() == 0; }

  /// Slope and discriminant; valid for any nonzero rank.
  Rat slope() const;
  Rat discriminant() const;

  /// "r,c1,ch2"
  std::string str() const;
  /// "r:mu:Delta" for positive rank, the raw form otherwise.
  std::string str_invariant() const;

  friend ChernChar operator+(const ChernChar& a, const ChernChar& b) {
    return {Integer(a.r + b.r), Integer(a.c1 + b.c1), a.ch2 + b.ch2};
  }
  friend ChernChar operator-(const ChernChar& a, const ChernChar& b) {
    return {Integer(a.r - b.r), Integer(a.c1 - b.c1), a.ch2 - b.ch2};
  }
  friend ChernChar operator*(const Integer& k, const ChernChar& a) {
    return {Integer(k * a.r), Integer(k * a.c1), Rat(k) * a.ch2};
  }
  friend bool operator==(const ChernChar& a, const ChernChar& b) {
    return a.r == b.r && a.c1 == b.c1 && a.ch2 == b.ch2;
  }
};

struct SlopeDisc {
  Rat mu;
  Rat disc;
};

/// Slope and discriminant of a positive-rank character. Throws NonPositiveRank.
SlopeDisc invariants(const ChernChar& xi);

/// The unique integral character with the given rank, slope and discriminant.
/// Throws NotIntegral (never rounds).
ChernChar from_invariants(const Integer& r, const Rat& mu, const Rat& disc);

/// Parses "r,c1,ch2" or "r:mu:Delta". Throws ParseError or NotIntegral.
ChernChar parse_character(std::string_view text);

/// Hilbert polynomial of the structure sheaf, P(m) = (m^2 + 3m + 2)/2.
Rat hilbert_p(const Rat& m);

/// chi = r + (3/2) c1 + ch2.
Rat euler_char(const ChernChar& xi);

/// Character of the tensor product.
ChernChar char_product(const ChernChar& a, const ChernChar& b);

/// chi(xi, zeta) = chi(xi^* . zeta).
Rat euler_pair(const ChernChar& xi, const ChernChar& zeta);

/// (xi, zeta) = chi(xi . zeta); symmetric.
Rat sym_pair(const ChernChar& xi, const ChernChar& zeta);

ChernChar twist(const ChernChar& xi, const Integer& n);

/// k-fold elementary modification: same rank and slope, discriminant + k/r,
/// Euler characteristic - k.
ChernChar elem_mod(const ChernChar& xi, const Integer& k);

/// The discriminants realised by integral characters of fixed (r, c1):
/// {base + k/r : k in Z}, base in [0, 1/r).
struct DiscLattice {
  Rat base;
  Rat step;

  bool contains(const Rat& x) const;
  /// Smallest element >= x.
  Rat at_least(const Rat& x) const;
  /// Smallest element > x.
  Rat above(const Rat& x) const;
};

DiscLattice disc_lattice(const Integer& r, const Integer& c1);

namespace detail {
// (r, -c1, ch2)
ChernChar dual(const ChernChar& xi);
}  // namespace detail

}  // namespace p2walls
