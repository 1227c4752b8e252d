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

#include <vector>

#include "p2walls/chern.hpp"
#include "p2walls/exactmath.hpp"

namespace p2walls {

/// An exceptional slope together with the invariants of its bundle.
struct ExcSlope {
  Rat alpha;
  Integer rank;        ///< smallest r with r*alpha integral
  Rat disc;            ///< (1 - 1/rank^2)/2
  QuadVal half_width;  ///< (3 - sqrt(5 + 8*disc))/2

  /// Open interval membership |mu - alpha| < half_width.
  bool interval_contains(const Rat& mu) const;
  ChernChar character() const;
};

/// Populates the record for a slope the caller knows to be exceptional.
ExcSlope exc_slope(const Rat& alpha);

/// Mutation of adjacent exceptional slopes alpha < beta:
/// (alpha + beta)/2 + (disc_beta - disc_alpha)/(3 + alpha - beta).
ExcSlope dot(const ExcSlope& alpha, const ExcSlope& beta);

inline constexpr int kTreeDepthLimit = 64;

/// The exceptional slope whose interval hosts mu (mu itself when mu is
/// exceptional). Throws TreeDepthExceeded if the tree walk does not settle.
ExcSlope containing_exceptional(const Rat& mu);

bool is_exceptional_slope(const Rat& mu);

/// Value of the Drezet-Le Potier curve at mu.
Rat delta(const Rat& mu);

/// All exceptional slopes in [0, 1] with rank <= max_rank, ascending.
std::vector<ExcSlope> exceptional_slopes_unit(const Integer& max_rank);

}  // namespace p2walls
