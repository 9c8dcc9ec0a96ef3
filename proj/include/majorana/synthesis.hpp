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

#include <vector>

#include "majorana/encoding.hpp"
#include "majorana/fock.hpp"

namespace majorana {

/// Target diagonal exp(i phases[j]) over 2^N logical basis states.
struct DiagonalTarget {
  int num_logical = 1;
  std::vector<Angle> phases;
};

/// Exact diagonal synthesis through the Walsh transform of the phase vector.
/// One rotation per nonzero Z-string coefficient, ordered by body size and then
/// by Majorana indices.
MajoranaProgram synth_diagonal(const DiagonalTarget& target);

/// Phase phi on |1...1> of n+1 logical qubits.
MajoranaProgram synth_cn_phase(int n, Angle phi);
MajoranaProgram synth_cn_z(int n);

// Local rotations on logical qubit k. `theta` is the Majorana rotation angle,
// so the realized qubit rotation is by 2*theta.
MajoranaProgram rz_on_logical(const Encoding& enc, int k, Angle theta);
MajoranaProgram rx_on_logical(const Encoding& enc, int k, Angle theta);
MajoranaProgram ry_on_logical(const Encoding& enc, int k, Angle theta);

/// Exact Hadamard on logical qubit k.
MajoranaProgram hadamard_on_logical(const Encoding& enc, int k);

/// C^n NOT over n+1 logical qubits; every qubit except `target` is a control.
MajoranaProgram synth_cn_not(int n, int target = 1);

/// C^n SWAP over n+2 logical qubits: qubits 1 and 2 are swapped when qubits
/// 3..n+2 are all 1.
MajoranaProgram synth_cn_swap(int n);

struct ControlledUnitaryParts {
  MajoranaProgram a, b, c;  // single-qubit programs on logical qubit 1, N = 2
};

ControlledUnitaryParts controlled_unitary_parts(double beta, double gamma, double delta);

/// Controlled-[Rz(beta) Ry(gamma) Rz(delta)] with control on logical qubit 2 and
/// target on logical qubit 1: (I x A) CNOT (I x B) CNOT (I x C).
MajoranaProgram synth_controlled_unitary(double beta, double gamma, double delta);

/// Program for the 7-braid CNOT word used inside other constructions.
MajoranaProgram cnot_braid_program();

}  // namespace majorana
