// Copyright 2026 The edgecover Authors.
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

#ifndef EDGECOVER_RATIONAL_H_
#define EDGECOVER_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>

namespace edgecover {

class Rational;
Rational SimplestInInterval(const Rational& lo, const Rational& hi);

// Exact fraction num/den held in lowest terms with den >= 1. Arithmetic is
// carried out in 128-bit intermediates and throws OverflowError when a result
// does not fit back into 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double ToDouble() const { return static_cast<double>(num_) / den_; }
  // "num/den"; integers print as "num/1" so the form is always the same.
  std::string ToString() const;
  // Accepts "a/b" or a bare integer "a".
  static Rational Parse(const std::string& text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  friend Rational SimplestInInterval(const Rational& lo, const Rational& hi);
  static Rational FromWide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// The fraction with the smallest denominator in the half-open interval
// [lo, hi), found by Stern-Brocot descent with run-length steps. Requires
// 0 <= lo < hi.
Rational SimplestInInterval(const Rational& lo, const Rational& hi);

}  // namespace edgecover

#endif  // EDGECOVER_RATIONAL_H_
