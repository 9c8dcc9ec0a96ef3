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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "majorana/encoding.hpp"
#include "majorana/fock.hpp"

namespace majorana {

/// Reference matrices in the logical computational basis. Qubit 1 is the
/// least significant bit of the basis index.
namespace gates {
Unitary identity(int num_qubits);
Unitary x();
Unitary y();
Unitary z();
Unitary h();
Unitary s();
Unitary t();
Unitary sqrt_x();
Unitary rx(double phi);
Unitary ry(double phi);
Unitary rz(double phi);
Unitary phase(double phi);

/// Tensor product with qubit 1 rightmost: kron(q_N, ..., q_1).
Unitary kron(const Unitary& high, const Unitary& low);
Unitary pauli_string(const std::string& label);  // leftmost letter is qubit N

Unitary cz();
Unitary cnot();  // control qubit 2, target qubit 1
Unitary swap();
Unitary anti_cnot();  // flips qubit 1 when qubit 2 is 0
Unitary iswap();
Unitary dcnot();
Unitary molmer_sorensen();
Unitary cross_resonance();
Unitary entangling_hadamard();
Unitary uzz(double phi);
Unitary uxx(double phi);
Unitary controlled_phase(double phi);
Unitary hadamard_all(int num_qubits);

/// Controlled-Z between two logical qubits of an N-qubit register.
Unitary cz_between(int num_qubits, int a, int b);
/// Phase on |1...1> of N qubits.
Unitary cn_phase(int num_qubits, double phi);
/// NOT on `target` when every other qubit is 1.
Unitary cn_not(int num_qubits, int target);
/// Swap qubits 1 and 2 when all qubits 3..N are 1.
Unitary cn_swap(int num_qubits);
/// Controlled Rz(beta) Ry(gamma) Rz(delta), control qubit 2, target qubit 1.
Unitary controlled_unitary(double beta, double gamma, double delta);
Unitary diagonal(const std::vector<Complex>& entries);
}  // namespace gates

/// Looks up a reference gate by CLI-style name, e.g. "CNOT", "Rz" or "CCZ".
/// Strings over I, X, Y, Z of length 2..11 name Pauli strings. Throws
/// UnknownGate or BadParams.
Unitary reference_gate(const std::string& name, const std::vector<double>& params = {});
std::vector<std::string> reference_gate_names();

enum class EntryKind { Gate, State };

struct CatalogEntry {
  std::string name;
  std::string description;
  EntryKind kind = EntryKind::Gate;
  int num_logical = 1;
  std::vector<double> default_params;
  std::function<MajoranaProgram(const std::vector<double>&)> program;
  std::function<Unitary(const std::vector<double>&)> reference;  // for states: column vector
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);
MajoranaProgram catalog_program(const std::string& name,
                                const std::vector<double>& params = {});

struct VerifyReport {
  std::string name;
  double fidelity = 0.0;
  Complex phase{1.0, 0.0};   // reference ~ phase * realized
  bool prefactor_exact = false;  // realized including its prefactor equals reference entrywise
  bool pass = false;
};

VerifyReport verify_entry(const CatalogEntry& entry, const std::vector<double>& params,
                          double eps = 1e-9);
VerifyReport verify_entry(const std::string& name, double eps = 1e-9);

/// Logical-space unitary realized by a program on N logical qubits.
Unitary realize_logical(int num_logical, const MajoranaProgram& program);

nlohmann::json catalog_json();

}  // namespace majorana
