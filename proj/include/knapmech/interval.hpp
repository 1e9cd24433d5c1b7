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

#ifndef KNAPMECH_INTERVAL_HPP_
#define KNAPMECH_INTERVAL_HPP_

#include <algorithm>
#include <stdexcept>
#include <string>

#include "knapmech/rational.hpp"

namespace knapmech {

// Closed interval with exact rational endpoints. Used to evaluate
// expressions involving irrational thresholds: each radical is replaced by
// a rational enclosure and the arithmetic keeps a sound enclosure of the
// true value. A claim established at the adverse end of the enclosure holds
// for the true value as well.
struct RatInterval {
  Rational lo;
  Rational hi;

  RatInterval() = default;
  RatInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
    if (hi < lo) throw std::invalid_argument("interval: hi < lo");
  }

  static RatInterval point(const Rational& r) { return RatInterval(r, r); }

  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
  bool strictly_positive() const { return lo.sign() > 0; }
  bool strictly_negative() const { return hi.sign() < 0; }
  // True when every point of the interval is strictly above r.
  bool strictly_above(const Rational& r) const { return lo > r; }
  bool strictly_below(const Rational& r) const { return hi < r; }

  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo + b.lo, a.hi + b.hi);
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo - b.hi, a.hi - b.lo);
  }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    const Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return RatInterval(std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]}));
  }
  friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.lo.sign() <= 0 && b.hi.sign() >= 0) {
      throw std::invalid_argument("interval: divisor contains zero");
    }
    const Rational c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    return RatInterval(std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]}));
  }
};

inline RatInterval interval_from_rational(const Rational& r) { return RatInterval::point(r); }

// sqrt(2) to nine decimal digits: 1.414213562 < sqrt(2) < 1.414213563.
inline RatInterval sqrt2_enclosure() {
  return RatInterval(Rational(1414213562, 1000000000), Rational(1414213563, 1000000000));
}

// sqrt(5) to nine decimal digits: 2.236067977 < sqrt(5) < 2.236067978.
inline RatInterval sqrt5_enclosure() {
  return RatInterval(Rational(2236067977, 1000000000), Rational(2236067978, 1000000000));
}

// Golden ratio (1 + sqrt(5)) / 2.
inline RatInterval golden_ratio_enclosure() {
  return (RatInterval::point(1) + sqrt5_enclosure()) / RatInterval::point(2);
}

}  // namespace knapmech

#endif  // KNAPMECH_INTERVAL_HPP_
