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

#include "majorana/types.hpp"

namespace majorana {

/// Even-parity code: N logical qubits in N+1 physical qubits.
///
/// Logical bits (n_N ... n_1) map to physical (n_N ... n_1 n_0) with
/// n_0 = n_1 ^ ... ^ n_N; physical qubit 1 is the parity qubit and logical
/// qubit k lives on physical qubit k+1.
class Encoding {
 public:
  explicit Encoding(int num_logical);

  int num_logical() const { return num_logical_; }
  int num_physical() const { return num_logical_ + 1; }
  int num_majoranas() const { return 2 * num_physical(); }
  std::size_t logical_dimension() const { return std::size_t{1} << num_logical_; }
  std::size_t physical_dimension() const { return std::size_t{1} << num_physical(); }

  /// 2^{N+1} x 2^N matrix with exactly one 1 per column.
  Eigen::MatrixXcd isometry() const;

 private:
  int num_logical_;
};

std::size_t encode_state(const Encoding& enc, std::size_t logical_index);
std::size_t decode_state(const Encoding& enc, std::size_t physical_index);

/// V^+ U V. Throws NotCodeSpacePreserving if U leaks out of the code space
/// by more than `leak_tol`.
Unitary restrict_to_logical(const Encoding& enc, const Unitary& physical,
                            double leak_tol = 1e-10);
StateVector restrict_state(const Encoding& enc, const StateVector& physical);
StateVector embed_state(const Encoding& enc, const StateVector& logical);

struct PhaseMatch {
  bool equal = false;
  Complex phase{1.0, 0.0};  // B ~ phase * A when equal
  double fidelity = 0.0;    // |tr(A^+ B)| / d
};

PhaseMatch equal_up_to_phase(const Unitary& a, const Unitary& b, double eps = 1e-9);

/// Sorted set of 1-based qubit labels carrying sigma_z.
using ZSupport = std::vector<int>;

ZSupport physical_to_logical_zsupport(const Encoding& enc, const ZSupport& physical);

/// Both physical supports realizing the logical Z-string: without and with the
/// parity qubit. First element excludes physical qubit 1.
std::pair<ZSupport, ZSupport> physical_supports_for(const Encoding& enc,
                                                    const ZSupport& logical);

/// Majorana indices {2q-1, 2q} over the cheaper physical support (fewer
/// qubits; on ties the one without the parity qubit).
std::vector<int> zstring_to_majorana_indices(const Encoding& enc,
                                             const ZSupport& logical);

/// Majorana indices {2q-1, 2q} for q in a physical support.
std::vector<int> majoranas_for_physical(const ZSupport& physical);

/// Diagonal of the sigma_z string on `support` over n qubits (+1/-1 entries).
std::vector<int> zstring_signs(int num_qubits, const ZSupport& support);

/// exp(-i theta Z_support) as a dense diagonal matrix.
Unitary zstring_rotation(int num_qubits, const ZSupport& support, double theta);

/// True iff `big` (N logical) acts like `small` (N-1 logical), up to phase, on
/// the sector where the top logical qubit is 0, and does not leak out of it.
bool ancilla_embed_check(const Encoding& small_enc, const Encoding& big_enc,
                         const Unitary& small, const Unitary& big,
                         double eps = 1e-9);

}  // namespace majorana
