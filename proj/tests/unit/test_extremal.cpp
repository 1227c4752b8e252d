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
#include <gtest/gtest.h>

#include "p2walls/error.hpp"
#include "p2walls/exceptional.hpp"
#include "p2walls/extremal.hpp"
#include "support.hpp"

using namespace p2walls;
using namespace p2walls::testing;

namespace {

struct Row {
  ChernChar sub, whole, quotient;
};

// Minimal extremal torsion-free triples in rank <= 6 with 0 < mu <= 1.
std::vector<Row> table1() {
  return {
      {inv(1, q(0), q(0)), inv(2, q(1, 2), q(3, 8)), inv(1, q(1), q(1))},
      {inv(1, q(0), q(0)), inv(3, q(1, 3), q(5, 9)), inv(2, q(1, 2), q(7, 8))},
      {inv(2, q(1, 2), q(3, 8)), inv(3, q(2, 3), q(5, 9)), inv(1, q(1), q(1))},
      {inv(1, q(0), q(0)), inv(4, q(1, 4), q(21, 32)), inv(3, q(1, 3), q(8, 9))},
      {inv(3, q(1, 3), q(5, 9)), inv(4, q(1, 2), q(5, 8)), inv(1, q(1), q(1))},
      {inv(3, q(2, 3), q(5, 9)), inv(4, q(3, 4), q(21, 32)), inv(1, q(1), q(1))},
      {inv(1, q(0), q(0)), inv(5, q(1, 5), q(18, 25)), inv(4, q(1, 4), q(29, 32))},
      {inv(3, q(1, 3), q(5, 9)), inv(5, q(2, 5), q(12, 25)), inv(2, q(1, 2), q(3, 8))},
      {inv(2, q(1, 2), q(3, 8)), inv(5, q(3, 5), q(12, 25)), inv(3, q(2, 3), q(5, 9))},
      {inv(4, q(3, 4), q(21, 32)), inv(5, q(4, 5), q(18, 25)), inv(1, q(1), q(1))},
      {inv(1, q(0), q(0)), inv(6, q(1, 6), q(55, 72)), inv(5, q(1, 5), q(23, 25))},
      {inv(4, q(1, 4), q(21, 32)), inv(6, q(1, 3), q(5, 9)), inv(2, q(1, 2), q(3, 8))},
      {inv(5, q(2, 5), q(12, 25)), inv(6, q(1, 2), q(17, 24)), inv(1, q(1), q(2))},
      {inv(5, q(3, 5), q(12, 25)), inv(6, q(2, 3), q(5, 9)), inv(1, q(1), q(1))},
      {inv(5, q(4, 5), q(18, 25)), inv(6, q(5, 6), q(55, 72)), inv(1, q(1), q(1))},
  };
}

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify(inv(6, q(1, 3), q(13, 18))).kind, StabilityClass::PositiveHeight);
  EXPECT_EQ(classify(inv(5, q(3, 5), q(12, 25))).kind, StabilityClass::Exceptional);
  EXPECT_EQ(classify(inv(3, q(1, 3), q(2, 9))).kind, StabilityClass::NotSemistable);
  EXPECT_EQ(classify(inv(3, q(1, 3), q(5, 9))).kind, StabilityClass::HeightZero);
  EXPECT_EQ(classify(inv(4, q(1, 2), q(3, 8))).kind, StabilityClass::SemiExceptional);
  EXPECT_EQ(classify(ChernChar(3, 0, q(0))).kind, StabilityClass::SemiExceptional);
  EXPECT_EQ(classify(inv(6, q(1, 3), q(13, 18))).height(), q(1, 6));
}

TEST(Classify, StabilityPredicates) {
  EXPECT_TRUE(is_stable_character(ChernChar(0, 1, q(1, 2))));
  EXPECT_FALSE(is_stable_character(ChernChar(0, -1, q(1, 2))));
  EXPECT_FALSE(is_stable_character(ChernChar(-1, 0, q(0))));
  EXPECT_FALSE(is_stable_character(ChernChar(2, 0, q(0))));
  EXPECT_TRUE(is_semistable_character(ChernChar(2, 0, q(0))));
  EXPECT_THROW(classify(ChernChar(0, 1, q(1, 2))), Error);
}

TEST(Classify, RequirePositiveHeight) {
  EXPECT_NO_THROW(require_positive_height(inv(6, q(1, 3), q(13, 18))));
  for (const ChernChar& xi : {inv(3, q(1, 3), q(5, 9)), inv(1, q(0), q(0)), ChernChar(2, 0, q(0))}) {
    try {
      require_positive_height(xi);
      ADD_FAILURE() << xi.str();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::HeightZeroInput) << xi.str();
    }
  }
  try {
    require_positive_height(inv(3, q(1, 3), q(2, 9)));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSemistableInput);
  }
}

TEST(Classify, ModuliDimension) {
  EXPECT_EQ(moduli_dimension(inv(1, q(0), q(2))), q(4));
  EXPECT_EQ(moduli_dimension(inv(6, q(1, 3), q(13, 18))), q(17));
  EXPECT_EQ(moduli_dimension(inv(5, q(3, 5), q(12, 25))), q(0));
}

TEST(MinStableDisc, Examples) {
  auto a = min_stable_disc(q(1, 2), Integer(6));
  EXPECT_EQ(a.disc, q(3, 8));
  EXPECT_EQ(a.rank, 2);
  auto b = min_stable_disc(q(0), Integer(5));
  EXPECT_EQ(b.disc, q(0));
  EXPECT_EQ(b.rank, 1);
  auto c = min_stable_disc(q(1, 4), Integer(6));
  EXPECT_EQ(c.disc, q(21, 32));
  EXPECT_EQ(c.rank, 4);
  try {
    min_stable_disc(q(1, 7), Integer(6));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoStableCharacter);
  }
}

TEST(ExtremalTriple, Examples) {
  const Decomposition a = extremal_triple(inv(6, q(1, 2), q(17, 24)));
  EXPECT_EQ(a.sub, inv(5, q(2, 5), q(12, 25)));
  EXPECT_EQ(a.quotient, inv(1, q(1), q(2)));
  EXPECT_TRUE(a.admissible);
  EXPECT_TRUE(a.extremal);
  EXPECT_FALSE(a.torsion);

  const Decomposition b = extremal_triple(inv(2, q(1), q(3, 2)));
  EXPECT_EQ(b.sub, inv(2, q(1, 2), q(3, 8)));
  EXPECT_TRUE(b.torsion);
  EXPECT_EQ(b.quotient.r, 0);
  EXPECT_GT(b.quotient.c1, 0);

  const Decomposition c = extremal_triple(inv(4, q(1, 2), q(7, 8)));
  EXPECT_EQ(c.sub, inv(3, q(1, 3), q(5, 9)));
  EXPECT_EQ(c.quotient, inv(1, q(1), q(2)));
  EXPECT_FALSE(c.coprime);
}

TEST(ExtremalTriple, AdmissibilityFailureIsReported) {
  const ChernChar xi = inv(41, q(25, 41), q(866, 1681));
  try {
    extremal_triple(xi);
    FAIL() << "expected AdmissibilityFailed";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AdmissibilityFailed);
    EXPECT_NE(std::string(e.what()).find("D2"), std::string::npos);
  }
}

TEST(ExtremalTriple, TwistEquivariant) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const ChernChar xi = random_positive_height(6);
    const Integer n(uniform(-4, 4));
    const Decomposition d = extremal_triple(xi);
    const Decomposition t = extremal_triple(twist(xi, n));
    ASSERT_EQ(t.sub, twist(d.sub, n)) << xi.str();
    ASSERT_EQ(t.quotient, twist(d.quotient, n)) << xi.str();
    ASSERT_EQ(t.failed, d.failed);
    ASSERT_EQ(t.minimal, d.minimal);
  }
}

TEST(ExtremalTriple, SmallRankAlwaysAdmissible) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const ChernChar xi = random_positive_height(6);
    const Decomposition d = extremal_triple(xi);
    ASSERT_TRUE(d.admissible) << xi.str();
    ASSERT_EQ(d.sub + d.quotient, xi);
    ASSERT_EQ(d.sub.slope(), farey_pred(xi.slope(), xi.r));
    if (d.torsion) ASSERT_TRUE(xi.slope().is_integer()) << xi.str();
  }
}

TEST(MinimalTriple, Examples) {
  const Decomposition a = minimal_triple(Integer(5), q(3, 5));
  EXPECT_EQ(a.sub, inv(2, q(1, 2), q(3, 8)));
  EXPECT_EQ(a.whole, inv(5, q(3, 5), q(12, 25)));
  EXPECT_EQ(a.quotient, inv(3, q(2, 3), q(5, 9)));
  const Decomposition b = minimal_triple(Integer(2), q(1, 2));
  EXPECT_EQ(b.sub, inv(1, q(0), q(0)));
  EXPECT_EQ(b.whole, inv(2, q(1, 2), q(3, 8)));
  EXPECT_EQ(b.quotient, inv(1, q(1), q(1)));
  const Decomposition c = minimal_triple(Integer(6), q(5, 6));
  EXPECT_EQ(c.sub, inv(5, q(4, 5), q(18, 25)));
  EXPECT_EQ(c.whole, inv(6, q(5, 6), q(55, 72)));
  EXPECT_EQ(c.quotient, inv(1, q(1), q(1)));
  EXPECT_TRUE(c.minimal);
}

TEST(MinimalTriple, TableOneRowsAreMinimalAdmissibleAndNegative) {
  for (const Row& row : table1()) {
    const Decomposition d = minimal_triple(row.whole.r, row.whole.slope());
    EXPECT_EQ(d.sub, row.sub) << row.whole.str_invariant();
    EXPECT_EQ(d.whole, row.whole);
    EXPECT_EQ(d.quotient, row.quotient);
    EXPECT_TRUE(d.admissible);
    EXPECT_TRUE(d.extremal);
    EXPECT_TRUE(d.minimal);
    EXPECT_TRUE(is_stable_character(d.quotient));
    EXPECT_LT(euler_pair(row.quotient, row.sub), q(0)) << row.whole.str_invariant();
  }
}

TEST(MinimalTriple, ModificationsFollowTheLattice) {
  for (long r = 1; r <= 6; ++r) {
    for (long c1 = 1; c1 <= r; ++c1) {
      const Rat mu{Integer(c1), Integer(r)};
      const Decomposition m = minimal_triple(Integer(r), mu);
      for (long k = 1; k <= 4; ++k) {
        const ChernChar xi = elem_mod(m.whole, Integer(k));
        const Decomposition d = extremal_triple(xi);
        EXPECT_EQ(d.sub, m.sub) << xi.str_invariant();
        EXPECT_FALSE(d.minimal);
      }
    }
  }
}

TEST(CurveDecomposition, Examples) {
  const CurveWitness a = curve_decomposition(inv(5, q(3, 5), q(17, 25)));
  EXPECT_EQ(a.tag, CurveTag::Standard);
  EXPECT_EQ(a.decomposition.sub, inv(2, q(1, 2), q(3, 8)));
  EXPECT_EQ(a.decomposition.quotient, inv(3, q(2, 3), q(8, 9)));
  EXPECT_EQ(a.chi, q(0));

  const CurveWitness b = curve_decomposition(inv(3, q(1, 3), q(8, 9)));
  EXPECT_EQ(b.tag, CurveTag::Sporadic2);
  EXPECT_EQ(b.decomposition.sub, ChernChar(2, 0, q(0)));

  const CurveWitness c = curve_decomposition(inv(6, q(1, 3), q(13, 18)));
  EXPECT_EQ(c.tag, CurveTag::Special5);
  EXPECT_EQ(c.decomposition.sub, ChernChar(5, 0, q(0)));
  EXPECT_EQ(c.decomposition.quotient, inv(1, q(2), q(6)));
  EXPECT_TRUE(c.decomposition.admissible);
}

TEST(CurveDecomposition, SporadicAndSpecialRecognition) {
  EXPECT_TRUE(is_special_twist(special_character()));
  EXPECT_TRUE(is_special_twist(twist(special_character(), Integer(-3))));
  EXPECT_FALSE(is_special_twist(inv(6, q(1, 3), q(8, 9))));
  for (long r = 2; r <= 6; ++r) {
    const ChernChar s = sporadic_character(Integer(r));
    EXPECT_EQ(s.slope(), Rat(Integer(1), Integer(r)));
    EXPECT_EQ(sporadic_rank(twist(s, Integer(2))), r);
    EXPECT_EQ(euler_pair(ChernChar(1, 0, q(0)), s), q(2));
  }
  EXPECT_EQ(sporadic_rank(inv(3, q(1, 3), q(11, 9))), 0);
  EXPECT_EQ(unit_shift(q(1)), 0);
  EXPECT_EQ(unit_shift(q(-1, 3)), -1);
}

TEST(CurveDecomposition, NeverPositiveChiInSmallRank) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const ChernChar xi = random_positive_height(6);
    const CurveWitness w = curve_decomposition(xi);
    ASSERT_LE(w.chi, q(0)) << xi.str();
    ASSERT_TRUE(w.decomposition.admissible) << xi.str();
  }
}

TEST(ChiChain, Examples) {
  const ChiChainEntry a = chi_chain(Integer(2), q(1, 2));
  EXPECT_EQ(a.decomposition.sub, inv(1, q(0), q(0)));
  EXPECT_EQ(a.decomposition.whole, inv(2, q(1, 2), q(11, 8)));
  EXPECT_EQ(a.decomposition.quotient, inv(1, q(1), q(3)));
  EXPECT_EQ(a.chi, q(0));
  EXPECT_EQ(a.steps, 2);

  const ChiChainEntry b = chi_chain(Integer(6), q(2, 3));
  EXPECT_EQ(b.decomposition.sub, inv(5, q(3, 5), q(12, 25)));
  EXPECT_EQ(b.decomposition.whole, inv(6, q(2, 3), q(13, 18)));
  EXPECT_EQ(b.decomposition.quotient, inv(1, q(1), q(2)));
  EXPECT_EQ(b.chi, q(-4));

  const ChiChainEntry c = chi_chain(Integer(5), q(2, 5));
  EXPECT_EQ(c.decomposition.sub, inv(3, q(1, 3), q(5, 9)));
  EXPECT_EQ(c.decomposition.whole, inv(5, q(2, 5), q(17, 25)));
  EXPECT_EQ(c.decomposition.quotient, inv(2, q(1, 2), q(7, 8)));
  EXPECT_EQ(c.chi, q(-1));
}

TEST(ChiChain, ChiStrictlyDecreasesAlongModifications) {
  for (long r = 1; r <= 6; ++r) {
    for (long c1 = 1; c1 <= r; ++c1) {
      const Rat mu{Integer(c1), Integer(r)};
      Decomposition d = minimal_triple(Integer(r), mu);
      Rat prev = euler_pair(d.sub, d.quotient);
      for (int k = 1; k <= 5; ++k) {
        d = extremal_triple(elem_mod(d.whole, Integer(1)));
        const Rat chi = euler_pair(d.sub, d.quotient);
        EXPECT_LE(chi, prev - q(1)) << d.whole.str_invariant();
        prev = chi;
      }
    }
  }
}
