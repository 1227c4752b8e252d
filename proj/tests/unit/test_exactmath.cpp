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
#include "p2walls/exactmath.hpp"
#include "support.hpp"

using namespace p2walls;
using namespace p2walls::testing;

namespace {

mpf_class high_precision(const QuadVal& x) {
  mpf_class a(x.rational_part().raw(), 2048), r(x.radicand().raw(), 2048), root(0, 2048);
  mpf_sqrt(root.get_mpf_t(), r.get_mpf_t());
  return x.root_sign() > 0 ? mpf_class(a + root, 2048) : mpf_class(a - root, 2048);
}

QuadVal random_quad() {
  const Rat a = random_rat(40, 12);
  const Rat r = random_rat(60, 12).abs();
  return QuadVal(a, r, uniform(0, 1) ? 1 : -1);
}

}  // namespace

TEST(Rat, ParsesAndReduces) {
  EXPECT_EQ(Rat::parse("3/6"), q(1, 2));
  EXPECT_EQ(Rat::parse("-4"), q(-4));
  EXPECT_EQ(Rat::parse("+7/2"), q(7, 2));
  EXPECT_EQ(Rat::parse("-10/4").str(), "-5/2");
  EXPECT_EQ(q(6, 3).str(), "2");
  EXPECT_EQ(q(3, -6).str(), "-1/2");
}

TEST(Rat, RejectsMalformedLiterals) {
  for (const char* bad : {"", "1/0", "a", "1.5", "1/", "/2", "--1", "1 /2"}) {
    try {
      Rat::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Rat, FloorCeilAbs) {
  EXPECT_EQ(q(-1, 2).floor(), -1);
  EXPECT_EQ(q(-1, 2).ceil(), 0);
  EXPECT_EQ(q(7, 3).floor(), 2);
  EXPECT_EQ(q(7, 3).ceil(), 3);
  EXPECT_EQ(q(4).ceil(), 4);
  EXPECT_EQ(q(-5, 3).abs(), q(5, 3));
}

TEST(Rat, LargeValuesStayExact) {
  Rat x(1);
  for (int i = 0; i < 200; ++i) x = x * q(1000000007, 3);
  for (int i = 0; i < 200; ++i) x = x / q(1000000007, 3);
  EXPECT_EQ(x, q(1));
}

TEST(QuadVal, FoldsPerfectSquares) {
  QuadVal x(q(0), q(4));
  EXPECT_TRUE(x.is_rational());
  EXPECT_EQ(x.rational_part(), q(2));
  QuadVal y(q(1), q(9, 4), -1);
  EXPECT_EQ(y.rational_part(), q(-1, 2));
}

TEST(QuadVal, ComparisonExamples) {
  EXPECT_EQ(quad_cmp(QuadVal(q(0), q(4)), QuadVal(q(2))), std::strong_ordering::equal);
  // (3 - sqrt 5)/2 against 1/3.
  EXPECT_EQ(quad_cmp(QuadVal(q(3, 2), q(5, 4), -1), QuadVal(q(1, 3))), std::strong_ordering::greater);
  EXPECT_EQ(quad_cmp(QuadVal(q(-2), q(4)), QuadVal(q(1))), std::strong_ordering::less);
  EXPECT_EQ(quad_cmp(QuadVal(q(1), q(2)), QuadVal(q(1), q(3))), std::strong_ordering::less);
  EXPECT_EQ(quad_cmp(QuadVal(q(1), q(2), -1), QuadVal(q(0), q(1, 8))), std::strong_ordering::less);
}

TEST(QuadVal, RenderingAndScaling) {
  EXPECT_EQ(QuadVal(q(-11, 6), q(145, 36)).str(), "-11/6 + sqrt(145/36)");
  EXPECT_EQ(QuadVal(q(3, 2), q(5, 4), -1).str(), "3/2 - sqrt(5/4)");
  EXPECT_EQ(QuadVal(q(5)).str(), "5");
  QuadVal neg = QuadVal(q(1), q(2)) * q(-2);
  EXPECT_EQ(neg.rational_part(), q(-2));
  EXPECT_EQ(neg.radicand(), q(8));
  EXPECT_EQ(neg.root_sign(), -1);
}

TEST(QuadVal, CompareMatchesHighPrecisionOracle) {
  for (int i = 0; i < kPropertyCases * 2; ++i) {
    const QuadVal x = random_quad(), y = random_quad();
    const mpf_class diff = high_precision(x) - high_precision(y);
    const int expected = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    const auto got = quad_cmp(x, y);
    const int g = got < 0 ? -1 : (got > 0 ? 1 : 0);
    ASSERT_EQ(g, expected) << x.str() << " vs " << y.str();
  }
}

TEST(QuadVal, ConstructedEqualitiesCompareEqual) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const Rat a = random_rat(30, 9), b = random_rat(30, 9).abs();
    // a + b == (a + 2b) - sqrt(b^2) == a + sqrt(b^2)
    ASSERT_EQ(quad_cmp(QuadVal(a + b), QuadVal(a, b * b)), std::strong_ordering::equal);
    ASSERT_EQ(quad_cmp(QuadVal(a + b), QuadVal(a + b + b, b * b, -1)), std::strong_ordering::equal);
    const QuadVal x = random_quad();
    ASSERT_EQ(quad_cmp(x, x), std::strong_ordering::equal);
    ASSERT_EQ(quad_cmp(x + a, x + a), std::strong_ordering::equal);
  }
}

TEST(QuadVal, TotalOrderOnRandomTriples) {
  for (int i = 0; i < kPropertyCases; ++i) {
    const QuadVal x = random_quad(), y = random_quad(), z = random_quad();
    const auto xy = quad_cmp(x, y), yx = quad_cmp(y, x);
    ASSERT_EQ(xy < 0, yx > 0);
    ASSERT_EQ(xy == 0, yx == 0);
    if (xy <= 0 && quad_cmp(y, z) <= 0) ASSERT_TRUE(quad_cmp(x, z) <= 0);
    if (xy >= 0 && quad_cmp(y, z) >= 0) ASSERT_TRUE(quad_cmp(x, z) >= 0);
  }
}

TEST(Decimal, RoundsHalfUpFromExactValue) {
  EXPECT_EQ(decimal(q(9, 8), 2), "1.13");
  EXPECT_EQ(decimal(q(1), 2), "1.00");
  EXPECT_EQ(decimal(q(1, 3)), "0.3333");
  EXPECT_EQ(decimal(q(-1, 3)), "-0.3333");
  EXPECT_EQ(decimal(q(-1, 100000)), "0.0000");
  EXPECT_EQ(decimal(q(123), 0), "123");
  EXPECT_EQ(decimal(QuadVal(q(-11, 6), q(145, 36))), "0.1736");
  EXPECT_EQ(decimal(QuadVal(q(-3), q(12))), "0.4641");
  EXPECT_EQ(decimal(QuadVal(q(56, 96), q(2560, 9216))), "1.1104");
}

TEST(FareyPred, Examples) {
  EXPECT_EQ(farey_pred(q(1, 3), 6), q(1, 4));
  EXPECT_EQ(farey_pred(q(1), 1), q(0));
  EXPECT_EQ(farey_pred(q(3, 5), 5), q(1, 2));
  EXPECT_EQ(farey_pred(q(0), 4), q(-1, 4));
  EXPECT_EQ(farey_pred(q(-1, 2), 3), q(-2, 3));
  EXPECT_EQ(farey_pred(q(1, 2), 6), q(2, 5));
  EXPECT_EQ(farey_pred(q(1), 6), q(5, 6));
}

TEST(FareyPred, MatchesBruteForceAndNeighbourDeterminant) {
  for (int i = 0; i < kPropertyCases * 2; ++i) {
    const long n = uniform(1, 40);
    const long b = uniform(1, n);
    const Rat mu(Integer(uniform(-3 * b, 3 * b)), Integer(b));
    const Rat got = farey_pred(mu, n);
    ASSERT_EQ(got, farey_pred_oracle(mu, n)) << mu.str() << " n=" << n;
    ASSERT_LE(got.den(), n);
    ASSERT_LT(got, mu);
    // p b' - q a' = 1 for Farey neighbours a'/b' < p/q.
    ASSERT_EQ(Integer(mu.num() * got.den() - mu.den() * got.num()), 1) << mu.str() << " n=" << n;
  }
}

TEST(FareyPred, CheapForLargeOrder) {
  const Integer n("1000000000000000000000");
  const Rat mu{Integer(355), Integer(113)};
  const Rat p = farey_pred(mu, n);
  EXPECT_LT(p, mu);
  EXPECT_LE(p.den(), n);
  EXPECT_EQ(Integer(mu.num() * p.den() - mu.den() * p.num()), 1);
}
