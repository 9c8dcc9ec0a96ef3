// Copyright 2026 The majorana-gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "majorana/types.hpp"

#include <numeric>

namespace majorana {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OddMajoranaCount: return "OddMajoranaCount";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EqualIndices: return "EqualIndices";
    case ErrorKind::OddCardinality: return "OddCardinality";
    case ErrorKind::NotCodeSpacePreserving: return "NotCodeSpacePreserving";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::UnknownGate: return "UnknownGate";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NonCommutingGenerators: return "NonCommutingGenerators";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw MajoranaError(ErrorKind::BadParams, "zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Rational operator+(Rational a, Rational b) {
  const std::int64_t l = std::lcm(a.den, b.den);
  return Rational::make(a.num * (l / a.den) + b.num * (l / b.den), l);
}

Rational operator*(Rational a, Rational b) {
  return Rational::make(a.num * b.num, a.den * b.den);
}

Angle Angle::operator-() const {
  if (pi_multiple_) return pi_times(-*pi_multiple_);
  return radians(-radians_);
}

Angle operator+(const Angle& a, const Angle& b) {
  if (a.pi_multiple_ && b.pi_multiple_) {
    return Angle::pi_times(*a.pi_multiple_ + *b.pi_multiple_);
  }
  return Angle::radians(a.radians_ + b.radians_);
}

Angle Angle::scaled(Rational factor) const {
  if (pi_multiple_) return pi_times(*pi_multiple_ * factor);
  return radians(radians_ * factor.value());
}

}  // namespace majorana
