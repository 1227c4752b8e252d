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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace p2walls {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  Rat(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(const Integer& num, const Integer& den);
  Rat(long num, long den) : Rat(Integer(num), Integer(den)) {}

  /// Parses "p", "-p" or "p/q" (no spaces). Throws Error{ParseError}.
  static Rat parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Integer floor() const;
  Integer ceil() const;
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  double to_double() const { return v_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  const mpq_class& raw() const { return v_; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Exact real number a + sign*sqrt(q) with rational a and q >= 0.
///
/// The sign field extends the plain a + sqrt(q) form so that interval
/// half-widths of the form (3 - sqrt(m))/2 are representable. Values whose
/// radicand is a perfect rational square are folded into `a`.
class QuadVal {
 public:
  QuadVal() = default;
  QuadVal(const Rat& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadVal(const Rat& a, const Rat& q, int root_sign = 1);

  const Rat& rational_part() const { return a_; }
  const Rat& radicand() const { return q_; }
  /// +1 or -1, and 0 exactly when the value is rational.
  int root_sign() const { return s_; }
  bool is_rational() const { return q_.sign() == 0; }

  QuadVal operator-() const;
  friend QuadVal operator+(const QuadVal& x, const Rat& y) { return QuadVal(x.a_ + y, x.q_, x.s_); }
  friend QuadVal operator-(const QuadVal& x, const Rat& y) { return QuadVal(x.a_ - y, x.q_, x.s_); }
  /// Scales by a rational; a negative factor flips the root sign.
  friend QuadVal operator*(const QuadVal& x, const Rat& k);

  double approx() const;
  /// "a", "a + sqrt(q)" or "a - sqrt(q)".
  std::string str() const;

 private:
  Rat a_{0};
  Rat q_{0};
  int s_ = 0;
};

int quad_sign(const QuadVal& x);
std::strong_ordering quad_cmp(const QuadVal& x, const QuadVal& y);

inline bool operator==(const QuadVal& x, const QuadVal& y) { return quad_cmp(x, y) == 0; }
inline std::strong_ordering operator<=>(const QuadVal& x, const QuadVal& y) { return quad_cmp(x, y); }

/// Largest rational strictly below mu whose reduced denominator is at most n.
/// Requires den(mu) <= n and n >= 1.
Rat farey_pred(const Rat& mu, const Integer& n);

/// Exact rational square root when q is a square of a rational.
bool rational_sqrt(const Rat& q, Rat& root);

/// Round-half-up decimal rendering with a fixed number of places, computed
/// from the exact value.
std::string decimal(const QuadVal& x, int places = 4);
std::string decimal(const Rat& x, int places = 4);

}  // namespace p2walls
