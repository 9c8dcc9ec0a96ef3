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


#include "majorana/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace majorana {
namespace {

constexpr double kDropTolerance = 1e-12;

struct Coefficient {
  std::size_t mask;  // Z-support as a bitmask over logical qubits
  Angle value;       // c_S
};

bool is_exact(const std::vector<Angle>& phases) {
  return std::all_of(phases.begin(), phases.end(),
                     [](const Angle& a) { return a.is_exact(); });
}

Rational reduce_mod_two(Rational r) {
  // r is a multiple of pi; fold into [0, 2).
  const std::int64_t two_den = 2 * r.den;
  std::int64_t num = r.num % two_den;
  if (num < 0) num += two_den;
  return Rational::make(num, r.den);
}

std::vector<Coefficient> walsh_coefficients(const DiagonalTarget& target) {
  const std::size_t dim = std::size_t{1} << target.num_logical;
  std::vector<Coefficient> out;
  out.reserve(dim);
  if (is_exact(target.phases)) {
    std::vector<Rational> phases;
    for (const auto& p : target.phases) phases.push_back(reduce_mod_two(*p.pi_multiple()));
    for (std::size_t mask = 0; mask < dim; ++mask) {
      Rational sum;
      for (std::size_t j = 0; j < dim; ++j) {
        sum = std::popcount(j & mask) % 2 == 0 ? sum + phases[j] : sum - phases[j];
      }
      out.push_back({mask, Angle::pi_times(sum * Rational::make(1, dim))});
    }
    return out;
  }
  std::vector<double> phases;
  for (const auto& p : target.phases) {
    double v = std::fmod(p.value(), 2 * kPi);
    if (v < 0) v += 2 * kPi;
    phases.push_back(v);
  }
  for (std::size_t mask = 0; mask < dim; ++mask) {
    double sum = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      sum += std::popcount(j & mask) % 2 == 0 ? phases[j] : -phases[j];
    }
    out.push_back({mask, Angle::radians(sum / static_cast<double>(dim))});
  }
  return out;
}

bool negligible(const Angle& a) {
  if (a.is_exact()) return a.pi_multiple()->is_zero();
  return std::abs(a.value()) < kDropTolerance;
}

void check_qubit(const Encoding& enc, int k) {
  if (k < 1 || k > enc.num_logical()) {
    throw MajoranaError(ErrorKind::IndexOutOfRange,
                        "logical qubit " + std::to_string(k) + " outside [1, " +
                            std::to_string(enc.num_logical()) + "]");
  }
}

MajoranaProgram single_step(std::vector<int> indices, Angle theta) {
  MajoranaProgram p;
  if (!negligible(theta)) p.steps.push_back({std::move(indices), theta});
  return p;
}

}  // namespace

MajoranaProgram synth_diagonal(const DiagonalTarget& target) {
  const Encoding enc(target.num_logical);
  if (target.phases.size() != enc.logical_dimension()) {
    throw MajoranaError(ErrorKind::BadParams,
                        "expected " + std::to_string(enc.logical_dimension()) +
                            " phases, got " + std::to_string(target.phases.size()));
  }
  const auto coeffs = walsh_coefficients(target);
  MajoranaProgram program;
  const Angle& global = coeffs.front().value;
  program.prefactor = std::exp(Complex{0.0, global.value()});
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (negligible(coeffs[i].value)) continue;
    ZSupport support;
    for (int k = 1; k <= target.num_logical; ++k) {
      if (coeffs[i].mask & (std::size_t{1} << (k - 1))) support.push_back(k);
    }
    program.steps.push_back(
        {zstring_to_majorana_indices(enc, support), -coeffs[i].value});
  }
  std::stable_sort(program.steps.begin(), program.steps.end(),
                   [](const MajoranaStep& a, const MajoranaStep& b) {
                     if (a.body() != b.body()) return a.body() < b.body();
                     return a.indices < b.indices;
                   });
  return program;
}

MajoranaProgram synth_cn_phase(int n, Angle phi) {
  if (n < 1) throw MajoranaError(ErrorKind::BadParams, "need n >= 1 controls");
  DiagonalTarget target;
  target.num_logical = n + 1;
  target.phases.assign(std::size_t{1} << (n + 1), Angle::pi_times(0, 1));
  target.phases.back() = phi;
  return synth_diagonal(target);
}

MajoranaProgram synth_cn_z(int n) { return synth_cn_phase(n, Angle::pi_times(1, 1)); }

MajoranaProgram rz_on_logical(const Encoding& enc, int k, Angle theta) {
  check_qubit(enc, k);
  return single_step({2 * k + 1, 2 * k + 2}, theta);
}

MajoranaProgram rx_on_logical(const Encoding& enc, int k, Angle theta) {
  check_qubit(enc, k);
  std::vector<int> indices;
  for (int a = 2; a <= 2 * k + 1; ++a) indices.push_back(a);
  return single_step(std::move(indices), theta);
}

MajoranaProgram ry_on_logical(const Encoding& enc, int k, Angle theta) {
  // Ry(2t) = Rz(pi/2) Rx(2t) Rz(-pi/2)
  return rz_on_logical(enc, k, Angle::pi_times(1, 4)) * rx_on_logical(enc, k, theta) *
         rz_on_logical(enc, k, Angle::pi_times(-1, 4));
}

MajoranaProgram hadamard_on_logical(const Encoding& enc, int k) {
  const Angle quarter = Angle::pi_times(1, 4);
  MajoranaProgram p = rz_on_logical(enc, k, quarter) * rx_on_logical(enc, k, quarter) *
                      rz_on_logical(enc, k, quarter);
  p.prefactor *= kI;  // Rz(pi/2) Rx(pi/2) Rz(pi/2) = -i H
  return p;
}

MajoranaProgram synth_cn_not(int n, int target) {
  const Encoding enc(n + 1);
  check_qubit(enc, target);
  const MajoranaProgram h = hadamard_on_logical(enc, target);
  return h * synth_cn_z(n) * h;
}

MajoranaProgram synth_cn_swap(int n) {
  if (n < 1) throw MajoranaError(ErrorKind::BadParams, "need n >= 1 controls");
  const MajoranaProgram to_first = synth_cn_not(n + 1, 1);
  return to_first * synth_cn_not(n + 1, 2) * to_first;
}

MajoranaProgram cnot_braid_program() {
  return braid_program({-5, 1, 2, 3, 1, 2, 1}, -std::exp(Complex{0.0, -kPi / 4}));
}

ControlledUnitaryParts controlled_unitary_parts(double beta, double gamma, double delta) {
  const Encoding enc(2);
  // Qubit rotations by phi use Majorana angle phi/2.
  auto rz = [&](double phi) { return rz_on_logical(enc, 1, Angle::radians(phi / 2)); };
  auto ry = [&](double phi) { return ry_on_logical(enc, 1, Angle::radians(phi / 2)); };
  ControlledUnitaryParts parts;
  parts.a = rz(beta) * ry(gamma / 2);
  parts.b = ry(-gamma / 2) * rz(-(beta + delta) / 2);
  parts.c = rz((delta - beta) / 2);
  return parts;
}

MajoranaProgram synth_controlled_unitary(double beta, double gamma, double delta) {
  const auto parts = controlled_unitary_parts(beta, gamma, delta);
  const MajoranaProgram cnot = cnot_braid_program();
  return parts.a * cnot * parts.b * cnot * parts.c;
}

}  // namespace majorana
