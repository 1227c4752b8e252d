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
#include <string>
#include <string_view>
#include <vector>

#include "p2walls/chern.hpp"
#include "p2walls/error.hpp"
#include "p2walls/extremal.hpp"

namespace p2walls {

enum class WallKind { Vertical, Semicircle, Empty };

std::string_view wall_kind_name(WallKind k);

/// Potential wall in the (s, t) half-plane. Radii are only ever stored
/// squared; endpoints are exact quadratic irrationals.
///
/// Vertical: `center` holds the line s = center. Semicircle: radius_sq > 0.
/// Empty: `has_center` tells whether the center/radius formulas produced a
/// value (radius_sq <= 0) or the wall degenerated entirely (two rank-0 classes).
struct Wall {
  WallKind kind = WallKind::Empty;
  Rat center;
  Rat radius_sq;
  bool has_center = false;

  static Wall vertical(const Rat& s) { return {WallKind::Vertical, s, Rat(0), true}; }

  QuadVal x_plus() const;
  QuadVal x_minus() const;

  friend bool operator==(const Wall& a, const Wall& b) {
    return a.kind == b.kind && a.has_center == b.has_center && a.center == b.center && a.radius_sq == b.radius_sq;
  }
};

/// Throws DependentCharacters when the classes are proportional.
Wall potential_wall(const ChernChar& a, const ChernChar& b);

/// Real and imaginary/t parts of the central charge Z_{s,t} with t^2 given.
Rat central_charge_re(const ChernChar& eta, const Rat& s, const Rat& t_sq);
Rat central_charge_im_over_t(const ChernChar& eta, const Rat& s);

/// Cross-multiplied Bridgeland slope equality at (s, t), t^2 = t_sq > 0.
bool on_wall(const ChernChar& xi, const ChernChar& zeta, const Rat& s, const Rat& t_sq);

/// r^2 Delta / (2 (r + 1)): radius bound for walls of higher-rank subobjects.
Rat rank_bound_radius_sq(const ChernChar& xi);

/// Larger root in Delta of rho(Delta)^2 = r^2/(2(r+1)) Delta, where rho is the
/// radius of the wall of the extremal destabiliser for rank r, slope mu.
/// Throws NoRoot.
QuadVal delta_one(const Integer& r, const Rat& mu);

enum class Certificate { ProvedSmallRank, ProvedSpecial, UpperBoundPlusHomAssumption, Heuristic };

std::string_view certificate_name(Certificate c);

enum class CheckStatus { Pass, Fail, Assumed };

std::string_view check_status_name(CheckStatus s);

struct WallCheck {
  std::string id;      ///< "1".."4" in the explicit-bound checklist
  std::string name;
  CheckStatus status = CheckStatus::Assumed;
};

struct GiesekerReport {
  Wall wall;
  ChernChar destabilizer;
  Decomposition decomposition;
  Certificate certificate = Certificate::Heuristic;
  std::vector<WallCheck> checks;
};

/// Largest wall for a positive-height character and its certificate.
/// Throws HeightZeroInput, NotSemistableInput, AdmissibilityFailed,
/// EmptyGiesekerWall.
GiesekerReport gieseker_wall(const ChernChar& xi);

inline constexpr std::uint64_t kDefaultSearchBudget = 1000000;

struct ExclusionResult {
  std::vector<ChernChar> violations;  ///< sorted by (rank, c1, ch2)
  std::uint64_t examined = 0;
};

class SearchBudgetError : public Error {
 public:
  SearchBudgetError(const std::string& what, ExclusionResult partial)
      : Error(ErrorCode::SearchBudgetExceeded, what), partial_(std::move(partial)) {}
  const ExclusionResult& partial() const { return partial_; }

 private:
  ExclusionResult partial_;
};

/// Brute-force search for (semi)stable characters theta' of rank 1..rk(xi)
/// with x_plus(wall) < mu(theta') < mu(xi) whose potential wall with xi is
/// strictly larger than `wall`. Throws SearchBudgetError.
ExclusionResult exclusion_search(const ChernChar& xi, const Wall& wall,
                                 std::uint64_t budget = kDefaultSearchBudget);

}  // namespace p2walls
