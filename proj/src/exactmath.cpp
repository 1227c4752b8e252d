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
#include "p2walls/exactmath.hpp"

#include <cctype>
#include <cmath>

#include "p2walls/error.hpp"

namespace p2walls {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Sign of d + sqrt(p) - sqrt(q) for p, q >= 0.
//
// Case table (after reducing to d >= 0 by negation and swapping p, q):
//   d = 0 or p = 0 : compare d^2 + p against q directly (one squaring).
//   otherwise      : (d + sqrt p)^2 - q = 2d sqrt(p) - e with e = q - d^2 - p;
//                    e < 0 means positive, else compare 4 d^2 p against e^2.
int sign_plus_minus(const Rat& d, const Rat& p, const Rat& q) {
  if (d.sign() < 0) return -sign_plus_minus(-d, q, p);
  Rat e = q - d * d - p;
  if (d.sign() == 0 || p.sign() == 0) return (-e).sign();
  if (e.sign() < 0) return 1;
  return (Rat(4) * d * d * p - e * e).sign();
}

// Sign of d + sqrt(p) + sqrt(q) for p, q >= 0.
int sign_plus_plus(const Rat& d, const Rat& p, const Rat& q) {
  if (d.sign() >= 0) return (d.sign() > 0 || p.sign() > 0 || q.sign() > 0) ? 1 : 0;
  return sign_plus_minus(p + q - d * d, Rat(4) * p * q, Rat(0));
}

// Sign of d + e1*sqrt(p) + e2*sqrt(q), e1, e2 in {-1, 0, +1}; a zero sign
// only accompanies a zero radicand.
int sign_of(const Rat& d, int e1, const Rat& p, int e2, const Rat& q) {
  if (e1 == 0) e1 = 1;
  if (e2 == 0) e2 = 1;
  if (e1 > 0 && e2 < 0) return sign_plus_minus(d, p, q);
  if (e1 < 0 && e2 > 0) return sign_plus_minus(d, q, p);
  if (e1 > 0) return sign_plus_plus(d, p, q);
  return -sign_plus_plus(-d, p, q);
}

}  // namespace

Rat::Rat(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view ns = body.substr(0, slash);
  std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(ns) || !all_digits(ds))
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  Integer n{std::string(ns)}, d{std::string(ds)};
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (neg) n = -n;
  return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.sign() == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Integer Rat::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Integer Rat::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

bool rational_sqrt(const Rat& q, Rat& root) {
  if (q.sign() < 0) return false;
  Integer n = q.num(), d = q.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rat(rn, rd);
  return true;
}

QuadVal::QuadVal(const Rat& a, const Rat& q, int root_sign) : a_(a), q_(q), s_(root_sign < 0 ? -1 : 1) {
  if (q_.sign() < 0) throw Error(ErrorCode::InvalidArgument, "negative radicand " + q_.str());
  Rat r;
  if (rational_sqrt(q_, r)) {
    a_ += s_ > 0 ? r : -r;
    q_ = Rat(0);
    s_ = 0;
  }
}

QuadVal QuadVal::operator-() const { return QuadVal(-a_, q_, -s_); }

QuadVal operator*(const QuadVal& x, const Rat& k) {
  if (k.sign() == 0) return QuadVal(Rat(0));
  return QuadVal(x.a_ * k, x.q_ * k * k, k.sign() > 0 ? x.s_ : -x.s_);
}

double QuadVal::approx() const { return a_.to_double() + s_ * std::sqrt(q_.to_double()); }

std::string QuadVal::str() const {
  if (is_rational()) return a_.str();
  return a_.str() + (s_ > 0 ? " + sqrt(" : " - sqrt(") + q_.str() + ")";
}

int quad_sign(const QuadVal& x) {
  return sign_of(x.rational_part(), x.root_sign(), x.radicand(), 1, Rat(0));
}

std::strong_ordering quad_cmp(const QuadVal& x, const QuadVal& y) {
  int s = sign_of(x.rational_part() - y.rational_part(), x.root_sign(), x.radicand(), -y.root_sign(),
                  y.radicand());
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rat farey_pred(const Rat& mu, const Integer& n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "Farey order must be positive");
  const Integer p = mu.num(), q = mu.den();
  if (q > n)
    throw Error(ErrorCode::InvalidArgument, "denominator of " + mu.str() + " exceeds order " + n.get_str());
  if (q == 1) return Rat(p) - Rat(Integer(1), n);
  // Left neighbour a/b satisfies p*b - q*a = 1 with n - q < b <= n.
  Integer b0;
  Integer pm = p % q;
  if (pm < 0) pm += q;
  mpz_invert(b0.get_mpz_t(), pm.get_mpz_t(), q.get_mpz_t());
  Integer k = (n - b0) / q;
  Integer b = b0 + k * q;
  Integer a = (p * b - 1) / q;
  return Rat(a, b);
}

std::string decimal(const QuadVal& x, int places) {
  if (places < 0) places = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  QuadVal scaled = x * Rat(scale);
  Integer m(std::floor(scaled.approx() + 0.5));
  const Rat half(1, 2);
  while (quad_cmp(scaled, QuadVal(Rat(m) + half)) >= 0) ++m;
  while (quad_cmp(scaled, QuadVal(Rat(m) - half)) < 0) --m;
  bool neg = m < 0;
  Integer mag = neg ? Integer(-m) : m;
  std::string digits = mag.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<size_t>(places))
      digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<size_t>(places), ".");
  }
  return neg ? "-" + digits : digits;
}

std::string decimal(const Rat& x, int places) { return decimal(QuadVal(x), places); }

}  // namespace p2walls
