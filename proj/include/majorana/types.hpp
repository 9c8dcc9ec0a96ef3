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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace majorana {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
using Unitary =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using StateVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

enum class ErrorKind {
  OddMajoranaCount,
  CapExceeded,
  IndexOutOfRange,
  EqualIndices,
  OddCardinality,
  NotCodeSpacePreserving,
  DimensionMismatch,
  EmptySupport,
  UnknownGate,
  BadParams,
  NonCommutingGenerators,
  NotExact,
  Parse,
};

const char* to_string(ErrorKind kind);

class MajoranaError : public std::runtime_error {
 public:
  MajoranaError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Reduced fraction p/q with q > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / den; }
  bool is_zero() const { return num == 0; }

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a) { return {-a.num, a.den}; }
  friend Rational operator-(Rational a, Rational b) { return a + (-b); }
  friend Rational operator*(Rational a, Rational b);
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Rotation angle in radians, optionally tagged as an exact multiple of pi.
class Angle {
 public:
  Angle() = default;
  static Angle radians(double value) { return Angle(value, std::nullopt); }
  static Angle pi_times(Rational multiple) {
    return Angle(multiple.value() * kPi, multiple);
  }
  static Angle pi_times(std::int64_t num, std::int64_t den) {
    return pi_times(Rational::make(num, den));
  }

  double value() const { return radians_; }
  const std::optional<Rational>& pi_multiple() const { return pi_multiple_; }
  bool is_exact() const { return pi_multiple_.has_value(); }

  Angle operator-() const;
  friend Angle operator+(const Angle& a, const Angle& b);
  friend Angle operator-(const Angle& a, const Angle& b) { return a + (-b); }
  Angle scaled(Rational factor) const;

 private:
  Angle(double radians, std::optional<Rational> multiple)
      : radians_(radians), pi_multiple_(multiple) {}

  double radians_ = 0.0;
  std::optional<Rational> pi_multiple_ = Rational{};
};

}  // namespace majorana
