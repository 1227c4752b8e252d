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
#include "p2walls/ample.hpp"

#include <array>

#include "p2walls/exceptional.hpp"

namespace p2walls {

namespace {

using Functional = std::array<Rat, 3>;

// Coefficients of zeta = (rho, c, d) |-> sym_pair(xi, zeta).
Functional sym_functional(const ChernChar& xi) {
  return {euler_char(xi), Rat(3) * Rat(xi.r) / Rat(2) + Rat(xi.c1), Rat(xi.r)};
}

Functional cross(const Functional& a, const Functional& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

ChernChar kernel_ray(const Functional& a, const Functional& b, const ChernChar& xi, const ChernChar& other) {
  Functional k = cross(a, b);
  if (k[0].sign() == 0 && k[1].sign() == 0 && k[2].sign() == 0)
    throw Error(ErrorCode::DependentCharacters,
                "orthogonality conditions of " + xi.str() + " and " + other.str() + " coincide");
  Integer lcm_den = 1;
  for (const Rat& v : k) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.den().get_mpz_t());
  const Rat scale(lcm_den);
  return primitive_ray(ChernChar((k[0] * scale).num(), (k[1] * scale).num(), k[2] * scale));
}

}  // namespace

ChernChar primitive_ray(const ChernChar& zeta) {
  if (zeta.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero class has no ray");
  Integer lcm_den = zeta.ch2.den();
  std::array<Integer, 3> ints{Integer(zeta.r * lcm_den), Integer(zeta.c1 * lcm_den),
                              Integer((Rat(2) * zeta.ch2 * Rat(lcm_den)).num())};
  Integer content = 0;
  for (auto& v : ints) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  for (auto& v : ints) v /= content;
  if (ints[0] > 0 || (ints[0] == 0 && (ints[1] > 0 || (ints[1] == 0 && ints[2] > 0))))
    for (auto& v : ints) v = -v;
  return ChernChar(ints[0], ints[1], Rat(ints[2], Integer(2)));
}

ChernChar u1(const ChernChar& xi) {
  require_positive_height(xi);
  return ChernChar(Integer(0), Integer(-xi.r), Rat(3) * Rat(xi.r) / Rat(2) + Rat(xi.c1));
}

ChernChar u1_dual_convention(const ChernChar& xi) {
  require_positive_height(xi);
  return ChernChar(Integer(0), Integer(-xi.r), Rat(3) * Rat(xi.r) / Rat(2) - Rat(xi.c1));
}

ChernChar primary_ray(const ChernChar& xi, const ChernChar& destabilizer) {
  return kernel_ray(sym_functional(xi), sym_functional(destabilizer), xi, destabilizer);
}

ChernChar primary_ray_dual_convention(const ChernChar& xi, const ChernChar& destabilizer) {
  return kernel_ray(sym_functional(detail::dual(xi)), sym_functional(detail::dual(destabilizer)), xi, destabilizer);
}

ChernChar primary_ray(const ChernChar& xi) { return primary_ray(xi, gieseker_wall(xi).destabilizer); }

bool singular_locus_empty(const ChernChar& xi) {
  const Classification c = classify(xi);
  if (c.disc < c.delta)
    throw Error(ErrorCode::NotSemistableInput, xi.str_invariant() + " lies below the curve delta");
  return c.height() < Rat(Integer(1), xi.r) && !is_exceptional_slope(c.mu);
}

bool duy_edge(const ChernChar& xi) {
  require_positive_height(xi);
  return !singular_locus_empty(xi);
}

AmpleReport ample_cone(const ChernChar& xi) {
  require_positive_height(xi);
  AmpleReport rep;
  rep.xi = xi;
  rep.gieseker = gieseker_wall(xi);
  rep.u1_ray = u1(xi);
  rep.primary_ray = primary_ray(xi, rep.gieseker.destabilizer);
  rep.curve_witness = curve_decomposition(xi);
  rep.singular_locus_empty = singular_locus_empty(xi);
  rep.duy_edge = !rep.singular_locus_empty;
  rep.moduli_dim = moduli_dimension(xi);
  rep.u1_ray_dual = u1_dual_convention(xi);
  rep.primary_ray_dual = primary_ray_dual_convention(xi, rep.gieseker.destabilizer);
  return rep;
}

}  // namespace p2walls
