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

#include <span>
#include <vector>

#include "majorana/types.hpp"

namespace majorana {

inline constexpr int kDefaultMajoranaCap = 24;

/// Fock space of M Majorana modes, i.e. Q = M/2 fermion modes.
///
/// Basis index j has bit (a-1) equal to the occupation n_a of mode a, and the
/// basis ket |n_Q ... n_1> is (c_1^+)^{n_1} (c_2^+)^{n_2} ... |0>. With that
/// ordering c_a acquires the sign (-1)^{n_1 + ... + n_{a-1}}.
class FockSpace {
 public:
  int num_majoranas() const { return num_majoranas_; }
  int num_physical_qubits() const { return num_majoranas_ / 2; }
  std::size_t dimension() const { return std::size_t{1} << num_physical_qubits(); }

 private:
  friend FockSpace build_fock(int, int);
  explicit FockSpace(int m) : num_majoranas_(m) {}
  int num_majoranas_;
};

FockSpace build_fock(int num_majoranas, int cap = kDefaultMajoranaCap);

/// One even-body rotation cos(theta) + i^{k-1} gamma_{i_2k} ... gamma_{i_1} sin(theta).
struct MajoranaStep {
  std::vector<int> indices;  // strictly ascending, 1-based
  Angle angle;

  int body() const { return static_cast<int>(indices.size()); }
};

/// Ordered steps (first step acts first) and a unit-modulus prefactor.
struct MajoranaProgram {
  std::vector<MajoranaStep> steps;
  Complex prefactor{1.0, 0.0};

  /// Largest Majorana index used, 0 for an empty program.
  int max_index() const;
};

/// Operator product lhs * rhs: the steps of rhs act first.
MajoranaProgram operator*(const MajoranaProgram& lhs, const MajoranaProgram& rhs);

/// Builds a program from a braid word written as an operator product, e.g.
/// {-5, 1, 2} for B5^-1 B1 B2 (B2 acts first). Negative entries are inverse
/// braids, realized as rotations by -pi/4.
MajoranaProgram braid_program(std::span<const int> printed_word,
                              Complex prefactor = Complex{1.0, 0.0});
MajoranaProgram braid_program(std::initializer_list<int> printed_word,
                              Complex prefactor = Complex{1.0, 0.0});

/// Image of basis state j under the monomial gamma_{i_n} ... gamma_{i_1}
/// (indices in any order, rightmost applied first).
struct BasisImage {
  std::size_t index;
  Complex amplitude;
};
BasisImage apply_monomial(std::span<const int> ascending_indices, std::size_t basis);

Unitary majorana_matrix(const FockSpace& space, int alpha);
Unitary pair_rotation(const FockSpace& space, int alpha, int beta, double theta);
Unitary braid(const FockSpace& space, int alpha);
Unitary manybody_rotation(const FockSpace& space, std::span<const int> indices,
                          double theta);
Unitary run_program(const FockSpace& space, const MajoranaProgram& program);
StateVector apply_program(const FockSpace& space, const MajoranaProgram& program,
                          const StateVector& state);
Unitary total_parity(const FockSpace& space);

/// Throws unless the step is a valid rotation for the given space.
void validate_step(const FockSpace& space, const MajoranaStep& step);

}  // namespace majorana
