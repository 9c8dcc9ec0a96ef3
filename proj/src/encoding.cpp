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


#include "majorana/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace majorana {
namespace {

void check_support(const ZSupport& s, int max_label) {
  for (int q : s) {
    if (q < 1 || q > max_label) {
      throw MajoranaError(ErrorKind::IndexOutOfRange,
                          "qubit label " + std::to_string(q) + " outside [1, " +
                              std::to_string(max_label) + "]");
    }
  }
}

ZSupport normalized(ZSupport s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

Encoding::Encoding(int num_logical) : num_logical_(num_logical) {
  if (num_logical < 1 || num_logical > 11) {
    throw MajoranaError(ErrorKind::IndexOutOfRange,
                        "logical qubit count must be in [1, 11]");
  }
}

Eigen::MatrixXcd Encoding::isometry() const {
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(physical_dimension(), logical_dimension());
  for (std::size_t l = 0; l < logical_dimension(); ++l) {
    v(encode_state(*this, l), l) = 1.0;
  }
  return v;
}

std::size_t encode_state(const Encoding& enc, std::size_t logical_index) {
  if (logical_index >= enc.logical_dimension()) {
    throw MajoranaError(ErrorKind::IndexOutOfRange,
                        "logical index " + std::to_string(logical_index) +
                            " outside the code");
  }
  const std::size_t parity = std::popcount(logical_index) & 1u;
  return (logical_index << 1) | parity;
}

std::size_t decode_state(const Encoding& enc, std::size_t physical_index) {
  if (physical_index >= enc.physical_dimension()) {
    throw MajoranaError(ErrorKind::IndexOutOfRange, "physical index outside space");
  }
  return physical_index >> 1;
}

Unitary restrict_to_logical(const Encoding& enc, const Unitary& physical,
                            double leak_tol) {
  const std::size_t pd = enc.physical_dimension();
  const std::size_t ld = enc.logical_dimension();
  if (static_cast<std::size_t>(physical.rows()) != pd ||
      static_cast<std::size_t>(physical.cols()) != pd) {
    throw MajoranaError(ErrorKind::DimensionMismatch,
                        "operator dimension " + std::to_string(physical.rows()) +
                            " != " + std::to_string(pd));
  }
  Unitary out(ld, ld);
  for (std::size_t c = 0; c < ld; ++c) {
    const std::size_t pc = encode_state(enc, c);
    for (std::size_t r = 0; r < pd; ++r) {
      const bool in_code = std::popcount(r) % 2 == 0;
      if (in_code) {
        out(decode_state(enc, r), c) = physical(r, pc);
      } else if (std::abs(physical(r, pc)) > leak_tol) {
        throw MajoranaError(ErrorKind::NotCodeSpacePreserving,
                            "operator mixes in odd-parity states");
      }
    }
  }
  return out;
}

StateVector restrict_state(const Encoding& enc, const StateVector& physical) {
  if (static_cast<std::size_t>(physical.size()) != enc.physical_dimension()) {
    throw MajoranaError(ErrorKind::DimensionMismatch, "state dimension mismatch");
  }
  StateVector out(enc.logical_dimension());
  for (std::size_t l = 0; l < enc.logical_dimension(); ++l) {
    out(l) = physical(encode_state(enc, l));
  }
  return out;
}

StateVector embed_state(const Encoding& enc, const StateVector& logical) {
  if (static_cast<std::size_t>(logical.size()) != enc.logical_dimension()) {
    throw MajoranaError(ErrorKind::DimensionMismatch, "state dimension mismatch");
  }
  StateVector out = StateVector::Zero(enc.physical_dimension());
  for (std::size_t l = 0; l < enc.logical_dimension(); ++l) {
    out(encode_state(enc, l)) = logical(l);
  }
  return out;
}

PhaseMatch equal_up_to_phase(const Unitary& a, const Unitary& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw MajoranaError(ErrorKind::DimensionMismatch, "operand shapes differ");
  }
  const Complex t = (a.adjoint() * b).trace();
  PhaseMatch m;
  m.fidelity = std::abs(t) / static_cast<double>(a.rows());
  m.equal = m.fidelity >= 1.0 - eps;
  if (std::abs(t) > 0.0) m.phase = t / std::abs(t);
  return m;
}

ZSupport physical_to_logical_zsupport(const Encoding& enc, const ZSupport& physical) {
  const ZSupport s = normalized(physical);
  check_support(s, enc.num_physical());
  const bool has_parity = !s.empty() && s.front() == 1;
  std::vector<bool> on(enc.num_logical() + 1, false);
  for (int q : s) {
    if (q > 1) on[q - 1] = true;
  }
  if (has_parity) {
    for (int k = 1; k <= enc.num_logical(); ++k) on[k] = !on[k];
  }
  ZSupport out;
  for (int k = 1; k <= enc.num_logical(); ++k) {
    if (on[k]) out.push_back(k);
  }
  return out;
}

std::pair<ZSupport, ZSupport> physical_supports_for(const Encoding& enc,
                                                    const ZSupport& logical) {
  const ZSupport s = normalized(logical);
  check_support(s, enc.num_logical());
  ZSupport without_parity;
  for (int k : s) without_parity.push_back(k + 1);
  ZSupport with_parity{1};
  for (int k = 1; k <= enc.num_logical(); ++k) {
    if (!std::binary_search(s.begin(), s.end(), k)) with_parity.push_back(k + 1);
  }
  return {without_parity, with_parity};
}

std::vector<int> majoranas_for_physical(const ZSupport& physical) {
  std::vector<int> out;
  for (int q : normalized(physical)) {
    out.push_back(2 * q - 1);
    out.push_back(2 * q);
  }
  return out;
}

std::vector<int> zstring_to_majorana_indices(const Encoding& enc,
                                             const ZSupport& logical) {
  if (logical.empty()) {
    throw MajoranaError(ErrorKind::EmptySupport, "Z-string support is empty");
  }
  const auto [plain, complement] = physical_supports_for(enc, logical);
  return majoranas_for_physical(complement.size() < plain.size() ? complement : plain);
}

std::vector<int> zstring_signs(int num_qubits, const ZSupport& support) {
  check_support(support, num_qubits);
  std::size_t mask = 0;
  for (int q : support) mask |= std::size_t{1} << (q - 1);
  std::vector<int> out(std::size_t{1} << num_qubits);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = std::popcount(j & mask) % 2 == 0 ? 1 : -1;
  }
  return out;
}

Unitary zstring_rotation(int num_qubits, const ZSupport& support, double theta) {
  const auto signs = zstring_signs(num_qubits, support);
  Unitary u = Unitary::Zero(signs.size(), signs.size());
  for (std::size_t j = 0; j < signs.size(); ++j) {
    u(j, j) = std::exp(Complex{0.0, -theta * signs[j]});
  }
  return u;
}

bool ancilla_embed_check(const Encoding& small_enc, const Encoding& big_enc,
                         const Unitary& small, const Unitary& big, double eps) {
  const auto sd = static_cast<Eigen::Index>(small_enc.logical_dimension());
  const auto bd = static_cast<Eigen::Index>(big_enc.logical_dimension());
  if (big_enc.num_logical() != small_enc.num_logical() + 1 || small.rows() != sd ||
      small.cols() != sd || big.rows() != bd || big.cols() != bd) {
    throw MajoranaError(ErrorKind::DimensionMismatch,
                        "ancilla check needs N-1 and N logical operators");
  }
  if (big.block(sd, 0, sd, sd).cwiseAbs().maxCoeff() > eps) return false;
  const Unitary sector = big.block(0, 0, sd, sd);
  return equal_up_to_phase(small, sector, eps).equal;
}

}  // namespace majorana
