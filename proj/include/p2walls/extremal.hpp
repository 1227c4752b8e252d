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
#include <vector>

#include "p2walls/chern.hpp"

namespace p2walls {

enum class StabilityClass { NotSemistable, Exceptional, SemiExceptional, HeightZero, PositiveHeight };

std::string_view stability_class_name(StabilityClass c);

struct Classification {
  StabilityClass kind = StabilityClass::NotSemistable;
  Rat mu;
  Rat disc;
  Rat delta;  ///< the curve value at mu

  bool stable() const {
    return kind == StabilityClass::Exceptional || kind == StabilityClass::HeightZero ||
           kind == StabilityClass::PositiveHeight;
  }
  bool semistable() const { return stable() || kind == StabilityClass::SemiExceptional; }
  Rat height() const { return disc - delta; }
};

/// Throws NonPositiveRank.
Classification classify(const ChernChar& xi);

/// Stability of an arbitrary-rank character as used for decomposition
/// components: rank-0 classes are stable exactly when c1 > 0, negative rank
/// never is.
bool is_stable_character(const ChernChar& xi);
bool is_semistable_character(const ChernChar& xi);

/// Throws HeightZeroInput (height zero or rigid) or NotSemistableInput.
void require_positive_height(const ChernChar& xi);

/// Moduli dimension r^2 (2 Delta - 1) + 1.
Rat moduli_dimension(const ChernChar& xi);

struct StableDisc {
  Rat disc;
  Integer rank;
};

/// Smallest discriminant of a stable character of slope mu and rank <= rmax,
/// with the minimal rank realising it. Throws NoStableCharacter.
StableDisc min_stable_disc(const Rat& mu, const Integer& rmax);

/// Decomposition xi = sub + quotient with its admissibility bookkeeping.
struct Decomposition {
  ChernChar sub;
  ChernChar whole;
  ChernChar quotient;
  bool admissible = false;
  bool extremal = false;
  bool torsion = false;
  bool coprime = false;
  bool minimal = false;
  std::vector<std::string> failed;  ///< names of violated D-conditions

  /// Evaluates the D1-D5 conditions for whole = sub + (whole - sub).
  static Decomposition evaluate(const ChernChar& sub, const ChernChar& whole);
};

Decomposition extremal_triple(const ChernChar& xi);

inline constexpr int kMinimalSearchCeiling = 10000;

/// Admissible extremal decomposition of the stable rank-r, slope-mu character
/// with the smallest lattice discriminant. Throws NoAdmissible.
Decomposition minimal_triple(const Integer& r, const Rat& mu, int ceiling = kMinimalSearchCeiling);

enum class CurveTag { Standard, Sporadic2, Special5 };

std::string_view curve_tag_name(CurveTag t);

struct CurveWitness {
  Decomposition decomposition;
  CurveTag tag = CurveTag::Standard;
  Rat chi;  ///< chi(sub, quotient)
};

/// Integer n with 0 < mu - n <= 1.
Integer unit_shift(const Rat& mu);

/// (6, 1/3, 13/18), i.e. (6, 2, -4).
ChernChar special_character();
/// (r, 1/r, P(-1/r) + 1/r).
ChernChar sporadic_character(const Integer& r);
bool is_special_twist(const ChernChar& xi);
/// Rank r in [2, 6] when xi is a twist of sporadic_character(r), else 0.
int sporadic_rank(const ChernChar& xi);

/// Decomposition whose extension curves witness the primary edge.
/// Throws UnexpectedPositiveChi.
CurveWitness curve_decomposition(const ChernChar& xi);

struct ChiChainEntry {
  Decomposition decomposition;
  Rat chi;
  int steps = 0;
};

/// Climbs from minimal_triple(r, mu) by elementary modifications until
/// chi(sub, quotient) <= 0.
ChiChainEntry chi_chain(const Integer& r, const Rat& mu);

}  // namespace p2walls
