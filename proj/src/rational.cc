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

#include "edgecover/rational.h"

#include <charconv>
#include <limits>
#include <numeric>

#include "edgecover/error.h"

namespace edgecover {
namespace {

using Wide = __int128;

Wide Gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool FitsInt64(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t ParseInt(const std::string& text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InputError("not an integer: '" + text + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = FromWide(num, den);
}

Rational Rational::FromWide(Wide num, Wide den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = Gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!FitsInt64(num) || !FitsInt64(den)) {
    throw OverflowError("rational value exceeds 64-bit range");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::string Rational::ToString() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::Parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(ParseInt(text));
  return Rational(ParseInt(text.substr(0, slash)),
                  ParseInt(text.substr(slash + 1)));
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::FromWide(static_cast<Wide>(a.num_) * b.den_ +
                                static_cast<Wide>(b.num_) * a.den_,
                            static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::FromWide(static_cast<Wide>(a.num_) * b.den_ -
                                static_cast<Wide>(b.num_) * a.den_,
                            static_cast<Wide>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::FromWide(static_cast<Wide>(a.num_) * b.num_,
                            static_cast<Wide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return Rational::FromWide(static_cast<Wide>(a.num_) * b.den_,
                            static_cast<Wide>(a.den_) * b.num_);
}

Rational SimplestInInterval(const Rational& lo, const Rational& hi) {
  if (lo < Rational(0) || !(lo < hi)) {
    throw InputError("SimplestInInterval needs 0 <= lo < hi");
  }
  if (lo == Rational(0)) return Rational(0);

  // Invariant: left < lo and right >= hi, with right = 1/0 standing for
  // infinity. Each pass moves one bound as far as it can go in a single step.
  Wide ln = 0, ld = 1, rn = 1, rd = 0;
  const Wide lo_n = lo.num(), lo_d = lo.den();
  const Wide hi_n = hi.num(), hi_d = hi.den();
  while (true) {
    const Wide mn = ln + rn, md = ld + rd;
    if (mn * lo_d < lo_n * md) {
      // Largest k with (ln + k rn) / (ld + k rd) < lo.
      const Wide a = rn * lo_d - lo_n * rd;
      const Wide b = lo_n * ld - ln * lo_d;
      const Wide k = (b - 1) / a;
      ln += k * rn;
      ld += k * rd;
    } else if (mn * hi_d >= hi_n * md) {
      // Largest k with (k ln + rn) / (k ld + rd) >= hi.
      const Wide c = hi_n * ld - ln * hi_d;
      const Wide e = rn * hi_d - hi_n * rd;
      const Wide k = e / c;
      rn += k * ln;
      rd += k * ld;
    } else {
      return Rational::FromWide(mn, md);
    }
  }
}

}  // namespace edgecover
