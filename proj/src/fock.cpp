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


#include "majorana/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace majorana {
namespace {

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_index(const FockSpace& space, int alpha) {
  if (alpha < 1 || alpha > space.num_majoranas()) {
    throw MajoranaError(ErrorKind::IndexOutOfRange,
                        "Majorana index " + std::to_string(alpha) +
                            " outside [1, " +
                            std::to_string(space.num_majoranas()) + "]");
  }
}

// Coefficient of the monomial term of a rotation over `body` Majoranas.
Complex monomial_phase(int body) { return i_power(body / 2 - 1); }

}  // namespace

FockSpace build_fock(int num_majoranas, int cap) {
  if (num_majoranas < 2 || num_majoranas % 2 != 0) {
    throw MajoranaError(ErrorKind::OddMajoranaCount,
                        "need an even count >= 2, got " +
                            std::to_string(num_majoranas));
  }
  if (num_majoranas > cap) {
    throw MajoranaError(ErrorKind::CapExceeded,
                        std::to_string(num_majoranas) + " Majoranas exceeds cap " +
                            std::to_string(cap));
  }
  return FockSpace(num_majoranas);
}

int MajoranaProgram::max_index() const {
  int m = 0;
  for (const auto& s : steps) {
    if (!s.indices.empty()) m = std::max(m, s.indices.back());
  }
  return m;
}

MajoranaProgram operator*(const MajoranaProgram& lhs, const MajoranaProgram& rhs) {
  MajoranaProgram out;
  out.steps.reserve(lhs.steps.size() + rhs.steps.size());
  out.steps = rhs.steps;
  out.steps.insert(out.steps.end(), lhs.steps.begin(), lhs.steps.end());
  out.prefactor = lhs.prefactor * rhs.prefactor;
  return out;
}

MajoranaProgram braid_program(std::span<const int> printed_word, Complex prefactor) {
  MajoranaProgram out;
  out.prefactor = prefactor;
  for (auto it = printed_word.rbegin(); it != printed_word.rend(); ++it) {
    const int a = std::abs(*it);
    out.steps.push_back(
        {{a, a + 1}, Angle::pi_times(*it > 0 ? 1 : -1, 4)});
  }
  return out;
}

MajoranaProgram braid_program(std::initializer_list<int> printed_word,
                              Complex prefactor) {
  return braid_program(std::span<const int>(printed_word.begin(), printed_word.size()),
                       prefactor);
}

BasisImage apply_monomial(std::span<const int> indices, std::size_t basis) {
  Complex amp{1.0, 0.0};
  std::size_t j = basis;
  for (int alpha : indices) {
    const int mode = (alpha - 1) / 2;
    const std::size_t bit = std::size_t{1} << mode;
    const bool odd_string = std::popcount(j & (bit - 1)) % 2 != 0;
    if (odd_string) amp = -amp;
    if (alpha % 2 == 0) {
      // gamma_{2b} = i (c^+ - c)
      amp *= (j & bit) ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
    }
    j ^= bit;
  }
  return {j, amp};
}

void validate_step(const FockSpace& space, const MajoranaStep& step) {
  if (step.indices.size() < 2 || step.indices.size() % 2 != 0) {
    throw MajoranaError(ErrorKind::OddCardinality,
                        "step needs an even number (>= 2) of Majoranas, got " +
                            std::to_string(step.indices.size()));
  }
  for (std::size_t i = 0; i < step.indices.size(); ++i) {
    check_index(space, step.indices[i]);
    if (i > 0 && step.indices[i] == step.indices[i - 1]) {
      throw MajoranaError(ErrorKind::EqualIndices, "repeated Majorana index");
    }
    if (i > 0 && step.indices[i] < step.indices[i - 1]) {
      throw MajoranaError(ErrorKind::BadParams,
                          "step indices must be strictly ascending");
    }
  }
}

Unitary majorana_matrix(const FockSpace& space, int alpha) {
  check_index(space, alpha);
  const std::size_t d = space.dimension();
  Unitary g = Unitary::Zero(d, d);
  const int idx[1] = {alpha};
  for (std::size_t j = 0; j < d; ++j) {
    const auto img = apply_monomial(idx, j);
    g(img.index, j) = img.amplitude;
  }
  return g;
}

Unitary pair_rotation(const FockSpace& space, int alpha, int beta, double theta) {
  check_index(space, alpha);
  check_index(space, beta);
  if (alpha == beta) {
    throw MajoranaError(ErrorKind::EqualIndices, "pair rotation needs alpha != beta");
  }
  const std::size_t d = space.dimension();
  Unitary u = Unitary::Identity(d, d) * std::cos(theta);
  const int idx[2] = {alpha, beta};  // gamma_beta gamma_alpha
  const double s = std::sin(theta);
  for (std::size_t j = 0; j < d; ++j) {
    const auto img = apply_monomial(idx, j);
    u(img.index, j) += s * img.amplitude;
  }
  return u;
}

Unitary braid(const FockSpace& space, int alpha) {
  if (alpha < 1 || alpha > space.num_majoranas() - 1) {
    throw MajoranaError(ErrorKind::IndexOutOfRange,
                        "braid index " + std::to_string(alpha) + " outside [1, " +
                            std::to_string(space.num_majoranas() - 1) + "]");
  }
  return pair_rotation(space, alpha, alpha + 1, kPi / 4);
}

Unitary manybody_rotation(const FockSpace& space, std::span<const int> indices,
                          double theta) {
  MajoranaStep step{{indices.begin(), indices.end()}, Angle::radians(theta)};
  validate_step(space, step);
  const std::size_t d = space.dimension();
  Unitary u = Unitary::Identity(d, d) * std::cos(theta);
  const Complex c = monomial_phase(step.body()) * std::sin(theta);
  for (std::size_t j = 0; j < d; ++j) {
    const auto img = apply_monomial(indices, j);
    u(img.index, j) += c * img.amplitude;
  }
  return u;
}

Unitary run_program(const FockSpace& space, const MajoranaProgram& program) {
  const std::size_t d = space.dimension();
  Unitary u = Unitary::Identity(d, d);
  Unitary next(d, d);
  for (const auto& step : program.steps) {
    validate_step(space, step);
    const double theta = step.angle.value();
    const Complex c = monomial_phase(step.body()) * std::sin(theta);
    next = u * std::cos(theta);
    for (std::size_t j = 0; j < d; ++j) {
      const auto img = apply_monomial(step.indices, j);
      next.row(img.index) += (c * img.amplitude) * u.row(j);
    }
    u.swap(next);
  }
  return u * program.prefactor;
}

StateVector apply_program(const FockSpace& space, const MajoranaProgram& program,
                          const StateVector& state) {
  const std::size_t d = space.dimension();
  if (static_cast<std::size_t>(state.size()) != d) {
    throw MajoranaError(ErrorKind::DimensionMismatch, "state dimension mismatch");
  }
  StateVector v = state;
  StateVector next(d);
  for (const auto& step : program.steps) {
    validate_step(space, step);
    const double theta = step.angle.value();
    const Complex c = monomial_phase(step.body()) * std::sin(theta);
    next = v * std::cos(theta);
    for (std::size_t j = 0; j < d; ++j) {
      const auto img = apply_monomial(step.indices, j);
      next(img.index) += c * img.amplitude * v(j);
    }
    v.swap(next);
  }
  return v * program.prefactor;
}

Unitary total_parity(const FockSpace& space) {
  const std::size_t d = space.dimension();
  Unitary p = Unitary::Zero(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    p(j, j) = std::popcount(j) % 2 == 0 ? 1.0 : -1.0;
  }
  return p;
}

}  // namespace majorana
