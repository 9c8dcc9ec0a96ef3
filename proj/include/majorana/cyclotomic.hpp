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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "majorana/encoding.hpp"
#include "majorana/fock.hpp"

namespace majorana {

/// Element a0 + a1 w + a2 w^2 + a3 w^3 of Z[w], w = exp(i pi/4), w^4 = -1.
struct ZOmega {
  std::array<std::int64_t, 4> c{};

  static ZOmega from_int(std::int64_t v) { return {{v, 0, 0, 0}}; }
  /// w^k for any integer k.
  static ZOmega omega_power(int k);

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  /// True when the value divided by sqrt(2) stays in Z[w].
  bool divisible_by_sqrt2() const { return (c[1] - c[3]) % 2 == 0 && (c[0] - c[2]) % 2 == 0; }
  ZOmega divided_by_sqrt2() const;
  ZOmega times_omega(int k) const;
  Complex to_complex() const;

  friend ZOmega operator+(const ZOmega& a, const ZOmega& b);
  friend ZOmega operator-(const ZOmega& a, const ZOmega& b);
  friend ZOmega operator*(const ZOmega& a, const ZOmega& b);
  friend bool operator==(const ZOmega&, const ZOmega&) = default;
};

/// Square matrix over Z[w] scaled by 1/sqrt(2)^k, kept with minimal k.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  static ExactMatrix identity(std::size_t dim);
  /// B_alpha = (I + gamma_{alpha+1} gamma_alpha)/sqrt2, or its inverse.
  static ExactMatrix braid(const FockSpace& space, int alpha, bool inverse = false);
  /// Restriction of an exact braid to the even-parity code space.
  static ExactMatrix logical_braid(const Encoding& enc, int alpha, bool inverse = false);

  std::size_t dim() const { return dim_; }
  int sqrt2_exponent() const { return k_; }
  const ZOmega& at(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  /// Returns w^k * this.
  ExactMatrix times_omega(int k) const;
  Unitary to_unitary() const;

  /// Byte key of the exact value. Only entries whose row and column have equal
  /// parity are stored when `parity_blocks` is set.
  std::string linear_key(bool parity_blocks = false) const;
  /// Key invariant under multiplication by powers of w; global phases of
  /// elements of this ring are always powers of w.
  std::string projective_key(bool parity_blocks = false) const;

 private:
  ExactMatrix(std::size_t dim, int k) : dim_(dim), k_(k), e_(dim * dim) {}
  void reduce();
  std::string key_with_rotation(int rotation, bool parity_blocks) const;

  std::size_t dim_ = 0;
  int k_ = 0;
  std::vector<ZOmega> e_;
};

}  // namespace majorana
