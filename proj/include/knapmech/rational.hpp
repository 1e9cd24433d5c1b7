// Copyright 2026 The knapmech Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KNAPMECH_RATIONAL_HPP_
#define KNAPMECH_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace knapmech {

// Exact rational number. Always held in lowest terms with a positive
// denominator; all arithmetic is exact. Values and sizes throughout the
// library use this type, never floating point.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    q_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    q_.canonicalize();
  }

  // Parses "p", "-p" or "p/q". Decimal notation is rejected with a message
  // suggesting the equivalent fraction.
  static Rational from_string(const std::string& text);

  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace detail {

inline bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

inline Rational Rational::from_string(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  if (body.find('.') != std::string::npos) {
    // Decimal input: compute the exact fraction so the error can suggest it.
    const std::size_t dot = body.find('.');
    const std::string ip = body.substr(0, dot);
    const std::string fp = body.substr(dot + 1);
    if ((detail::all_digits(ip) || ip.empty()) && detail::all_digits(fp)) {
      mpz_class scale = 1;
      for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
      mpz_class num = mpz_class(ip.empty() ? std::string("0") : ip) * scale + mpz_class(fp);
      Rational r(negative ? mpz_class(-num) : num, scale);
      throw std::invalid_argument("rational: decimals not permitted; use " + r.str());
    }
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
  const std::size_t slash = body.find('/');
  if (slash == std::string::npos) {
    if (!detail::all_digits(body)) throw std::invalid_argument("rational: cannot parse '" + text + "'");
    Rational r(mpz_class(body), mpz_class(1));
    return negative ? -r : r;
  }
  const std::string num = body.substr(0, slash);
  const std::string den = body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den)) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
  if (mpz_class(den) == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  Rational r{mpz_class(num), mpz_class(den)};
  return negative ? -r : r;
}

}  // namespace knapmech

#endif  // KNAPMECH_RATIONAL_HPP_
