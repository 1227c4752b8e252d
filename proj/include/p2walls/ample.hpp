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

#include "p2walls/chern.hpp"
#include "p2walls/extremal.hpp"
#include "p2walls/walls.hpp"

namespace p2walls {

/// Rank-0 class (0, -r, 3r/2 + c1) orthogonal to xi under sym_pair.
/// Throws HeightZeroInput / NotSemistableInput.
ChernChar u1(const ChernChar& xi);

/// Primitive negative-rank class orthogonal to both xi and destabilizer under
/// sym_pair. Throws DependentCharacters when the two functionals coincide.
ChernChar primary_ray(const ChernChar& xi, const ChernChar& destabilizer);

/// primary_ray against the Gieseker-wall destabilizer.
ChernChar primary_ray(const ChernChar& xi);

/// Same constructions with orthogonality taken in chi(xi^*, .) instead.
ChernChar u1_dual_convention(const ChernChar& xi);
ChernChar primary_ray_dual_convention(const ChernChar& xi, const ChernChar& destabilizer);

/// Scales a class to integral primitive (rk, c1, 2 ch2) whose first nonzero
/// entry is negative.
ChernChar primitive_ray(const ChernChar& zeta);

/// Delta - delta(mu) < 1/r and mu not exceptional. Throws NotSemistableInput.
bool singular_locus_empty(const ChernChar& xi);

/// True iff singular sheaves exist. Requires positive height.
bool duy_edge(const ChernChar& xi);

struct AmpleReport {
  ChernChar xi;
  ChernChar u1_ray;
  ChernChar primary_ray;
  GiesekerReport gieseker;
  CurveWitness curve_witness;
  bool singular_locus_empty = false;
  bool duy_edge = false;
  Rat moduli_dim;
  ChernChar u1_ray_dual;
  ChernChar primary_ray_dual;
};

AmpleReport ample_cone(const ChernChar& xi);

}  // namespace p2walls
