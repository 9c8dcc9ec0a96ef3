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


#include "majorana/cyclotomic.hpp"

#include <bit>
#include <cmath>
#include <limits>

namespace majorana {

ZOmega ZOmega::omega_power(int k) { return from_int(1).times_omega(k); }

ZOmega ZOmega::times_omega(int k) const {
  k = ((k % 8) + 8) % 8;
  ZOmega out = *this;
  for (int step = 0; step < k; ++step) {
    out.c = {-out.c[3], out.c[0], out.c[1], out.c[2]};
  }
  return out;
}

ZOmega ZOmega::divided_by_sqrt2() const {
  // x / sqrt2 = x (w - w^3) / 2
  return {{(c[1] - c[3]) / 2, (c[0] + c[2]) / 2, (c[1] + c[3]) / 2, (c[2] - c[0]) / 2}};
}

Complex ZOmega::to_complex() const {
  const double h = 1.0 / std::sqrt(2.0);
  return {c[0] + h * (c[1] - c[3]), c[2] + h * (c[1] + c[3])};
}

ZOmega operator+(const ZOmega& a, const ZOmega& b) {
  return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]}};
}

ZOmega operator-(const ZOmega& a, const ZOmega& b) {
  return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]}};
}

ZOmega operator*(const ZOmega& a, const ZOmega& b) {
  ZOmega out;
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      const std::int64_t p = a.c[i] * b.c[j];
      if (i + j < 4) {
        out.c[i + j] += p;
      } else {
        out.c[i + j - 4] -= p;
      }
    }
  }
  return out;
}

namespace {

ZOmega unit_from_complex(Complex z) {
  if (z == Complex{1, 0}) return ZOmega::omega_power(0);
  if (z == Complex{0, 1}) return ZOmega::omega_power(2);
  if (z == Complex{-1, 0}) return ZOmega::omega_power(4);
  if (z == Complex{0, -1}) return ZOmega::omega_power(6);
  throw MajoranaError(ErrorKind::NotExact, "monomial amplitude is not a power of i");
}

void append_coefficient(std::string& out, std::int64_t v) {
  if (v < std::numeric_limits<std::int16_t>::min() ||
      v > std::numeric_limits<std::int16_t>::max()) {
    throw MajoranaError(ErrorKind::NotExact, "ring coefficient exceeds key range");
  }
  const auto u = static_cast<std::uint16_t>(static_cast<std::int16_t>(v));
  out.push_back(static_cast<char>(u & 0xff));
  out.push_back(static_cast<char>(u >> 8));
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) m.e_[i * dim + i] = ZOmega::from_int(1);
  return m;
}

ExactMatrix ExactMatrix::braid(const FockSpace& space, int alpha, bool inverse) {
  if (alpha < 1 || alpha >= space.num_majoranas()) {
    throw MajoranaError(ErrorKind::IndexOutOfRange, "braid index " + std::to_string(alpha));
  }
  const std::size_t d = space.dimension();
  ExactMatrix m(d, 1);
  const int idx[2] = {alpha, alpha + 1};
  for (std::size_t j = 0; j < d; ++j) {
    const BasisImage img = apply_monomial(idx, j);
    ZOmega amp = unit_from_complex(img.amplitude);
    if (inverse) amp = ZOmega::from_int(0) - amp;
    m.e_[j * d + j] = m.e_[j * d + j] + ZOmega::from_int(1);
    m.e_[img.index * d + j] = m.e_[img.index * d + j] + amp;
  }
  m.reduce();
  return m;
}

ExactMatrix ExactMatrix::logical_braid(const Encoding& enc, int alpha, bool inverse) {
  const FockSpace space = build_fock(enc.num_majoranas());
  const ExactMatrix full = braid(space, alpha, inverse);
  const std::size_t d = enc.logical_dimension();
  ExactMatrix m(d, full.k_);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m.e_[r * d + c] = full.at(encode_state(enc, r), encode_state(enc, c));
    }
  }
  m.reduce();
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw MajoranaError(ErrorKind::DimensionMismatch, "exact product");
  const std::size_t d = a.dim_;
  ExactMatrix out(d, a.k_ + b.k_);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) {
      const ZOmega& x = a.e_[r * d + s];
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < d; ++c) {
        const ZOmega& y = b.e_[s * d + c];
        if (!y.is_zero()) out.e_[r * d + c] = out.e_[r * d + c] + x * y;
      }
    }
  }
  out.reduce();
  return out;
}

void ExactMatrix::reduce() {
  while (k_ > 0) {
    for (const auto& x : e_) {
      if (!x.divisible_by_sqrt2()) return;
    }
    for (auto& x : e_) x = x.divided_by_sqrt2();
    --k_;
  }
}

ExactMatrix ExactMatrix::times_omega(int k) const {
  ExactMatrix out = *this;
  for (auto& x : out.e_) x = x.times_omega(k);
  return out;
}

Unitary ExactMatrix::to_unitary() const {
  const double scale = std::pow(std::sqrt(0.5), k_);
  Unitary u(dim_, dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) u(r, c) = scale * e_[r * dim_ + c].to_complex();
  }
  return u;
}

std::string ExactMatrix::key_with_rotation(int rotation, bool parity_blocks) const {
  std::string out;
  out.reserve(1 + e_.size() * 8);
  out.push_back(static_cast<char>(k_));
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (parity_blocks && std::popcount(r) % 2 != std::popcount(c) % 2) continue;
      const ZOmega x = e_[r * dim_ + c].times_omega(rotation);
      for (auto v : x.c) append_coefficient(out, v);
    }
  }
  return out;
}

std::string ExactMatrix::linear_key(bool parity_blocks) const {
  return key_with_rotation(0, parity_blocks);
}

std::string ExactMatrix::projective_key(bool parity_blocks) const {
  // Pick the rotation w^m that makes the first nonzero entry's coefficient
  // tuple lexicographically largest; distinct m give distinct tuples.
  for (const auto& x : e_) {
    if (x.is_zero()) continue;
    int best = 0;
    ZOmega best_value = x;
    for (int m = 1; m < 8; ++m) {
      const ZOmega y = x.times_omega(m);
      if (y.c > best_value.c) {
        best = m;
        best_value = y;
      }
    }
    return key_with_rotation(best, parity_blocks);
  }
  throw MajoranaError(ErrorKind::NotExact, "zero matrix has no projective key");
}

}  // namespace majorana
