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


#include "majorana/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "majorana/serialize.hpp"
#include "majorana/synthesis.hpp"

namespace majorana {
namespace gates {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const Complex kOmega = std::exp(Complex{0.0, kPi / 4});

Unitary from_rows(int dim, std::initializer_list<Complex> values, Complex scale = 1.0) {
  Unitary m(dim, dim);
  auto it = values.begin();
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m(r, c) = scale * *it++;
  }
  return m;
}

void check_size(int num_qubits, int minimum) {
  if (num_qubits < minimum || num_qubits > 11) {
    throw MajoranaError(ErrorKind::BadParams,
                        "qubit count " + std::to_string(num_qubits) + " out of range");
  }
}

}  // namespace

Unitary identity(int num_qubits) {
  const auto d = Eigen::Index{1} << num_qubits;
  return Unitary::Identity(d, d);
}

Unitary x() { return from_rows(2, {0, 1, 1, 0}); }
Unitary y() { return from_rows(2, {0, -kI, kI, 0}); }
Unitary z() { return diagonal({1, -1}); }
Unitary h() { return from_rows(2, {1, 1, 1, -1}, kInvSqrt2); }
Unitary s() { return diagonal({1, kI}); }
Unitary t() { return diagonal({1, kOmega}); }
Unitary sqrt_x() { return from_rows(2, {1.0 + kI, 1.0 - kI, 1.0 - kI, 1.0 + kI}, 0.5); }

Unitary rx(double phi) {
  const double c = std::cos(phi / 2), s = std::sin(phi / 2);
  return from_rows(2, {c, -kI * s, -kI * s, c});
}

Unitary ry(double phi) {
  const double c = std::cos(phi / 2), s = std::sin(phi / 2);
  return from_rows(2, {c, -s, s, c});
}

Unitary rz(double phi) {
  return diagonal({std::exp(Complex{0.0, -phi / 2}), std::exp(Complex{0.0, phi / 2})});
}

Unitary phase(double phi) { return diagonal({1, std::exp(Complex{0.0, phi})}); }

Unitary kron(const Unitary& high, const Unitary& low) {
  Unitary out(high.rows() * low.rows(), high.cols() * low.cols());
  for (Eigen::Index r = 0; r < high.rows(); ++r) {
    for (Eigen::Index c = 0; c < high.cols(); ++c) {
      out.block(r * low.rows(), c * low.cols(), low.rows(), low.cols()) = high(r, c) * low;
    }
  }
  return out;
}

Unitary pauli_string(const std::string& label) {
  if (label.empty()) throw MajoranaError(ErrorKind::BadParams, "empty Pauli label");
  Unitary out = Unitary::Identity(1, 1);
  for (char ch : label) {
    Unitary factor;
    switch (ch) {
      case 'I': factor = identity(1); break;
      case 'X': factor = x(); break;
      case 'Y': factor = y(); break;
      case 'Z': factor = z(); break;
      default:
        throw MajoranaError(ErrorKind::BadParams, std::string("bad Pauli letter ") + ch);
    }
    out = kron(out, factor);
  }
  return out;
}

Unitary cz() { return diagonal({1, 1, 1, -1}); }
Unitary cnot() { return cn_not(2, 1); }
Unitary swap() { return cn_swap(2); }
Unitary anti_cnot() {
  return from_rows(4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
}
Unitary iswap() {
  return from_rows(4, {1, 0, 0, 0, 0, 0, kI, 0, 0, kI, 0, 0, 0, 0, 0, 1});
}
Unitary dcnot() {
  return from_rows(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0});
}
Unitary molmer_sorensen() {
  return from_rows(4, {1, 0, 0, kI, 0, 1, -kI, 0, 0, -kI, 1, 0, kI, 0, 0, 1}, kInvSqrt2);
}
Unitary cross_resonance() {
  return from_rows(4, {0, 0, 1, kI, 0, 0, kI, 1, 1, -kI, 0, 0, -kI, 1, 0, 0}, kInvSqrt2);
}
Unitary entangling_hadamard() {
  return from_rows(4, {1, 1, 1, 1, 1, -1, 1, -1, 1, -1, -1, 1, 1, 1, -1, -1}, 0.5);
}

Unitary uzz(double phi) {
  const Complex a = std::exp(Complex{0.0, -phi / 2}), b = std::conj(a);
  return diagonal({a, b, b, a});
}

Unitary uxx(double phi) {
  const double c = std::cos(phi / 2), s = std::sin(phi / 2);
  return from_rows(4, {c, 0, 0, -kI * s, 0, c, -kI * s, 0, 0, -kI * s, c, 0,
                       -kI * s, 0, 0, c});
}

Unitary controlled_phase(double phi) { return cn_phase(2, phi); }

Unitary hadamard_all(int num_qubits) {
  Unitary out = Unitary::Identity(1, 1);
  for (int k = 0; k < num_qubits; ++k) out = kron(out, h());
  return out;
}

Unitary cz_between(int num_qubits, int a, int b) {
  check_size(num_qubits, 2);
  if (a == b || a < 1 || b < 1 || a > num_qubits || b > num_qubits) {
    throw MajoranaError(ErrorKind::BadParams, "invalid CZ qubit pair");
  }
  const auto d = std::size_t{1} << num_qubits;
  const std::size_t mask = (std::size_t{1} << (a - 1)) | (std::size_t{1} << (b - 1));
  std::vector<Complex> entries(d, 1.0);
  for (std::size_t j = 0; j < d; ++j) {
    if ((j & mask) == mask) entries[j] = -1.0;
  }
  return diagonal(entries);
}

Unitary cn_phase(int num_qubits, double phi) {
  check_size(num_qubits, 1);
  Unitary out = identity(num_qubits);
  out(out.rows() - 1, out.cols() - 1) = std::exp(Complex{0.0, phi});
  return out;
}

Unitary cn_not(int num_qubits, int target) {
  check_size(num_qubits, 2);
  if (target < 1 || target > num_qubits) {
    throw MajoranaError(ErrorKind::BadParams, "target outside register");
  }
  const auto d = std::size_t{1} << num_qubits;
  const std::size_t flip = std::size_t{1} << (target - 1);
  const std::size_t controls = (d - 1) & ~flip;
  Unitary out = Unitary::Zero(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const std::size_t img = (j & controls) == controls ? j ^ flip : j;
    out(img, j) = 1.0;
  }
  return out;
}

Unitary cn_swap(int num_qubits) {
  check_size(num_qubits, 2);
  const auto d = std::size_t{1} << num_qubits;
  const std::size_t controls = (d - 1) & ~std::size_t{3};
  Unitary out = Unitary::Zero(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t img = j;
    if ((j & controls) == controls && ((j & 1) != ((j >> 1) & 1))) img = j ^ 3;
    out(img, j) = 1.0;
  }
  return out;
}

Unitary controlled_unitary(double beta, double gamma, double delta) {
  Unitary out = identity(2);
  out.block(2, 2, 2, 2) = rz(beta) * ry(gamma) * rz(delta);
  return out;
}

Unitary diagonal(const std::vector<Complex>& entries) {
  const auto d = static_cast<Eigen::Index>(entries.size());
  Unitary out = Unitary::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) out(j, j) = entries[j];
  return out;
}

}  // namespace gates

namespace {

using Params = std::vector<double>;

void expect_params(const std::string& name, const Params& params, std::size_t count) {
  if (params.size() != count) {
    throw MajoranaError(ErrorKind::BadParams,
                        name + " takes " + std::to_string(count) + " parameter(s), got " +
                            std::to_string(params.size()));
  }
}

int as_count(double v) {
  const int n = static_cast<int>(std::lround(v));
  if (std::abs(v - n) > 1e-12 || n < 1) {
    throw MajoranaError(ErrorKind::BadParams, "control count must be a positive integer");
  }
  return n;
}

struct GateFactory {
  std::size_t num_params;
  std::function<Unitary(const Params&)> make;
};

const std::map<std::string, GateFactory>& gate_factories() {
  using namespace gates;
  auto fixed = [](Unitary (*f)()) {
    return GateFactory{0, [f](const Params&) { return f(); }};
  };
  auto one = [](Unitary (*f)(double)) {
    return GateFactory{1, [f](const Params& p) { return f(p[0]); }};
  };
  static const std::map<std::string, GateFactory> table = {
      {"I", {0, [](const Params&) { return identity(1); }}},
      {"X", fixed(x)},
      {"Y", fixed(y)},
      {"Z", fixed(z)},
      {"H", fixed(h)},
      {"S", fixed(s)},
      {"T", fixed(t)},
      {"SqrtX", fixed(sqrt_x)},
      {"Rx", one(rx)},
      {"Ry", one(ry)},
      {"Rz", one(rz)},
      {"Phase", one(phase)},
      {"CZ", fixed(cz)},
      {"CNOT", fixed(cnot)},
      {"SWAP", fixed(swap)},
      {"ACNOT", fixed(anti_cnot)},
      {"iSWAP", fixed(iswap)},
      {"DCNOT", fixed(dcnot)},
      {"MS", fixed(molmer_sorensen)},
      {"CR", fixed(cross_resonance)},
      {"H2", fixed(entangling_hadamard)},
      {"HxH", {0, [](const Params&) { return hadamard_all(2); }}},
      {"Uzz", one(uzz)},
      {"Uxx", one(uxx)},
      {"CPhase", one(controlled_phase)},
      {"CCZ", {0, [](const Params&) { return cn_phase(3, kPi); }}},
      {"CCPhase", {1, [](const Params& p) { return cn_phase(3, p[0]); }}},
      {"Toffoli", {0, [](const Params&) { return cn_not(3, 1); }}},
      {"Fredkin", {0, [](const Params&) { return cn_swap(3); }}},
      {"CnZ", {1, [](const Params& p) { return cn_phase(as_count(p[0]) + 1, kPi); }}},
      {"CnPhase",
       {2, [](const Params& p) { return cn_phase(as_count(p[0]) + 1, p[1]); }}},
      {"CnNOT", {1, [](const Params& p) { return cn_not(as_count(p[0]) + 1, 1); }}},
      {"CnSWAP", {1, [](const Params& p) { return cn_swap(as_count(p[0]) + 2); }}},
      {"CU",
       {3, [](const Params& p) { return controlled_unitary(p[0], p[1], p[2]); }}},
  };
  return table;
}

// Literal matrix for the three-qubit braid Hadamard B7 B6 ... B1.
Unitary braid_hadamard3() {
  const int signs[8][8] = {
      {1, 1, 1, 1, 1, 1, 1, 1},     {1, -1, 1, -1, 1, -1, 1, -1},
      {1, -1, -1, 1, 1, -1, -1, 1}, {1, 1, -1, -1, 1, 1, -1, -1},
      {1, -1, -1, 1, -1, 1, 1, -1}, {1, 1, -1, -1, -1, -1, 1, 1},
      {1, 1, 1, 1, -1, -1, -1, -1}, {1, -1, 1, -1, -1, 1, -1, 1}};
  Unitary out(8, 8);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) out(r, c) = signs[r][c] / std::sqrt(8.0);
  }
  return out;
}

Unitary column(std::initializer_list<Complex> amps, double scale) {
  Unitary v(static_cast<Eigen::Index>(amps.size()), 1);
  Eigen::Index i = 0;
  for (Complex a : amps) v(i++, 0) = scale * a;
  return v;
}

MajoranaProgram steps_program(std::initializer_list<std::pair<std::vector<int>, Angle>> steps,
                              Complex prefactor) {
  MajoranaProgram p;
  for (const auto& [idx, angle] : steps) p.steps.push_back({idx, angle});
  p.prefactor = prefactor;
  return p;
}

Complex cis(double phi) { return std::exp(Complex{0.0, phi}); }

// Odd braids B1, B3, B5, B7 written with the label k standing for B_{2k-1}.
std::vector<int> odd_labels(std::initializer_list<int> word) {
  std::vector<int> out;
  for (int k : word) out.push_back((k > 0 ? 1 : -1) * (2 * std::abs(k) - 1));
  return out;
}

std::vector<CatalogEntry> build_catalog() {
  using namespace gates;
  std::vector<CatalogEntry> c;
  const Complex w = std::exp(Complex{0.0, kPi / 4});
  const Complex wbar = std::conj(w);

  auto word_gate = [&](std::string name, std::string description, int n,
                       std::vector<int> word, Complex pref, Unitary ref) {
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(description);
    e.num_logical = n;
    e.program = [word, pref](const Params&) { return braid_program(word, pref); };
    e.reference = [ref](const Params&) { return ref; };
    c.push_back(std::move(e));
  };
  auto word_state = [&](std::string name, std::string description, int n,
                        std::vector<int> word, Complex pref, Unitary ref) {
    word_gate(std::move(name), std::move(description), n, std::move(word), pref,
              std::move(ref));
    c.back().kind = EntryKind::State;
  };
  auto program_gate = [&](std::string name, std::string description, int n, Params defaults,
                          std::function<MajoranaProgram(const Params&)> program,
                          std::function<Unitary(const Params&)> ref) {
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(description);
    e.num_logical = n;
    e.default_params = std::move(defaults);
    e.program = std::move(program);
    e.reference = std::move(ref);
    c.push_back(std::move(e));
  };

  // One logical qubit.
  word_gate("S", "single braid B1", 1, {1}, w, s());
  word_gate("SqrtX", "single braid B2", 1, {2}, w, sqrt_x());
  word_gate("Z", "double braid B3^2", 1, {3, 3}, kI, z());
  word_gate("X", "double braid B2^2", 1, {2, 2}, kI, x());
  word_gate("Y", "B2^2 B3^2 with recorded prefactor -1", 1, {2, 2, 3, 3}, -1.0, y());
  word_gate("H", "triple braid B2 B3 B2", 1, {2, 3, 2}, kI, h());
  program_gate("T", "pi/8 rotation of gamma_1 gamma_2", 1, {},
               [&](const Params&) {
                 return steps_program({{{1, 2}, Angle::pi_times(1, 8)}}, cis(kPi / 8));
               },
               [](const Params&) { return t(); });
  program_gate("Rz", "B1(theta) = Rz(2 theta)", 1, {0.7},
               [](const Params& p) {
                 return steps_program({{{1, 2}, Angle::radians(p[0] / 2)}}, 1.0);
               },
               [](const Params& p) { return rz(p[0]); });
  program_gate("Rx", "B2(theta) = Rx(2 theta)", 1, {0.7},
               [](const Params& p) {
                 return steps_program({{{2, 3}, Angle::radians(p[0] / 2)}}, 1.0);
               },
               [](const Params& p) { return rx(p[0]); });
  program_gate("Ry", "Rz(pi/2) Rx(phi) Rz(-pi/2)", 1, {0.7},
               [](const Params& p) {
                 return ry_on_logical(Encoding(1), 1, Angle::radians(p[0] / 2));
               },
               [](const Params& p) { return ry(p[0]); });
  program_gate("H_rotations", "Rz(pi/2) Rx(pi/2) Rz(pi/2) with prefactor i", 1, {},
               [](const Params&) { return hadamard_on_logical(Encoding(1), 1); },
               [](const Params&) { return h(); });
  word_state("EvenCat", "B1 B2 on |0>", 1, {1, 2}, w, column({1, 1}, kInvSqrt2));
  word_state("OddCat", "B1^-1 B2 on |0>", 1, {-1, 2}, wbar, column({1, -1}, kInvSqrt2));

  // Two logical qubits.
  word_gate("CZ", "B5^-1 B3^-1 B1", 2, {-5, -3, 1}, wbar, cz());
  word_gate("CNOT", "seven-braid word", 2, {-5, 1, 2, 3, 1, 2, 1}, -wbar, cnot());
  word_gate("SWAP", "seven-braid word", 2, {-3, -4, -5, 3, 4, 3, 1}, w, swap());
  word_gate("ACNOT", "seven-braid word", 2, {-5, -1, -2, 3, 1, 2, 1}, w, anti_cnot());
  word_gate("iSWAP", "six-braid word", 2, {3, 4, 5, 3, 4, 3}, -1.0, iswap());
  word_gate("DCNOT", "eight-braid word", 2, {-2, -3, -4, -5, 1, 2, 3, 4}, 1.0, dcnot());
  word_gate("MS", "seven-braid word", 2, {3, 4, 5, 4, 3, 1, 1}, -kI, molmer_sorensen());
  word_gate("CR", "seven-braid word", 2, {4, 4, 1, 2, 3, 2, 1}, -1.0, cross_resonance());
  word_gate("H2", "B5 B4 B3 B2 B1", 2, {5, 4, 3, 2, 1}, -wbar, entangling_hadamard());
  word_gate("HxH", "CNOT word followed by the H2 word, recorded prefactor -1", 2,
            {-5, 1, 2, 3, 1, 2, 1, 5, 4, 3, 2, 1}, -1.0, hadamard_all(2));
  word_gate("IxH", "B2 B3 B2", 2, {2, 3, 2}, kI, kron(identity(1), h()));
  word_gate("HxI", "B1 B2 B3 B4 B3 B2 B1", 2, {1, 2, 3, 4, 3, 2, 1}, -1.0,
            kron(h(), identity(1)));
  word_gate("IZ", "B3^2", 2, {3, 3}, kI, pauli_string("IZ"));
  word_gate("ZI", "B5^2", 2, {5, 5}, kI, pauli_string("ZI"));
  word_gate("ZZ", "B5^2 B3^2", 2, {5, 5, 3, 3}, -1.0, pauli_string("ZZ"));
  word_gate("IX", "B2^2", 2, {2, 2}, kI, pauli_string("IX"));
  word_gate("XX", "B4^2", 2, {4, 4}, kI, pauli_string("XX"));
  word_gate("XI", "B4^2 B2^2", 2, {4, 4, 2, 2}, -1.0, pauli_string("XI"));
  word_state("EqualCoefficient2", "B1 B2 B3 B4 B5 on |00>", 2, {1, 2, 3, 4, 5}, kI,
             column({1, 1, 1, 1}, 0.5));
  program_gate("CPhase", "B5(theta) B3(theta) B1(-theta) with theta = phi/4", 2, {0.9},
               [](const Params& p) {
                 const double q = p[0] / 4;
                 return steps_program({{{1, 2}, Angle::radians(-q)},
                                       {{3, 4}, Angle::radians(q)},
                                       {{5, 6}, Angle::radians(q)}},
                                      cis(q));
               },
               [](const Params& p) { return controlled_phase(p[0]); });
  program_gate("Uzz", "B1(theta) = Uzz(2 theta)", 2, {0.7},
               [](const Params& p) {
                 return steps_program({{{1, 2}, Angle::radians(p[0] / 2)}}, 1.0);
               },
               [](const Params& p) { return uzz(p[0]); });
  program_gate("Uxx", "B4(theta) = Uxx(2 theta)", 2, {0.7},
               [](const Params& p) {
                 return steps_program({{{4, 5}, Angle::radians(p[0] / 2)}}, 1.0);
               },
               [](const Params& p) { return uxx(p[0]); });
  program_gate("CU", "(I x A) CNOT (I x B) CNOT (I x C)", 2, {0.4, 1.1, -0.6},
               [](const Params& p) { return synth_controlled_unitary(p[0], p[1], p[2]); },
               [](const Params& p) { return controlled_unitary(p[0], p[1], p[2]); });

  // Three logical qubits.
  word_gate("CZ_embedded", "two-qubit CZ word acting on three logical qubits", 3,
            {-5, -3, 1}, wbar, diagonal({1, 1, 1, -1, kI, -kI, -kI, -kI}));
  word_gate("H3", "B7 B6 B5 B4 B3 B2 B1", 3, {7, 6, 5, 4, 3, 2, 1}, -1.0, braid_hadamard3());
  word_gate("IIH", "B2 B3 B2", 3, {2, 3, 2}, kI, kron(identity(2), h()));
  word_gate("HII", "B1 ... B6 B5 ... B1", 3, {1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1}, -kI,
            kron(h(), identity(2)));
  word_gate("IiSWAP", "B3 B4 B5 B3 B4 B3", 3, {3, 4, 5, 3, 4, 3}, -1.0,
            kron(identity(1), iswap()));
  word_gate("iSWAPI", "B5 B6 B7 B5 B6 B5", 3, {5, 6, 7, 5, 6, 5}, -1.0,
            kron(iswap(), identity(1)));
  word_gate("IIZ", "B3^2", 3, {3, 3}, kI, pauli_string("IIZ"));
  word_gate("IZI", "B5^2", 3, {5, 5}, kI, pauli_string("IZI"));
  word_gate("ZII", "B7^2", 3, {7, 7}, kI, pauli_string("ZII"));
  word_gate("IZZ", "B5^2 B3^2", 3, {5, 5, 3, 3}, -1.0, pauli_string("IZZ"));
  word_gate("ZZI", "B7^2 B5^2", 3, {7, 7, 5, 5}, -1.0, pauli_string("ZZI"));
  word_gate("ZIZ", "B7^2 B3^2", 3, {7, 7, 3, 3}, -1.0, pauli_string("ZIZ"));
  word_gate("ZZZ", "B7^2 B5^2 B3^2", 3, {7, 7, 5, 5, 3, 3}, -kI, pauli_string("ZZZ"));
  word_gate("IIX", "B2^2", 3, {2, 2}, kI, pauli_string("IIX"));
  word_gate("IXX", "B4^2", 3, {4, 4}, kI, pauli_string("IXX"));
  word_gate("XXI", "B6^2", 3, {6, 6}, kI, pauli_string("XXI"));
  word_gate("IXI", "B4^2 B2^2", 3, {4, 4, 2, 2}, -1.0, pauli_string("IXI"));

  struct OddDiag {
    std::initializer_list<int> word;
    Complex pref;
    std::initializer_list<Complex> diag;
  };
  const OddDiag odd[] = {
      {{-4, 3, 2, 1}, kI, {1, -1, -1, -1, 1, 1, 1, -1}},
      {{-3, 4, 2, 1}, kI, {1, -1, 1, 1, -1, -1, 1, -1}},
      {{-2, 3, 4, 1}, kI, {1, 1, -1, 1, -1, 1, -1, -1}},
      {{-4, -3, -2, 1}, -kI, {1, 1, 1, -1, 1, -1, -1, -1}},
      {{4, 3, 2, 1}, -1.0, {1, -1, -1, -1, -1, -1, -1, 1}},
      {{-4, -3, 2, 1}, 1.0, {1, -1, 1, 1, 1, 1, -1, 1}},
      {{-4, -2, 3, 1}, 1.0, {1, 1, -1, 1, 1, -1, 1, 1}},
      {{-3, -2, 4, 1}, 1.0, {1, 1, 1, -1, -1, 1, 1, 1}},
  };
  int k = 1;
  for (const auto& d : odd) {
    word_gate("OddDiag" + std::to_string(k++), "four odd braids, label k read as B_{2k-1}",
              3, odd_labels(d.word), d.pref, diagonal(d.diag));
  }

  const Angle p8 = Angle::pi_times(1, 8), m8 = Angle::pi_times(-1, 8);
  program_gate("CCZ", "seven pi/8 rotations", 3, {},
               [=](const Params&) {
                 return steps_program({{{1, 2}, p8},
                                       {{3, 4}, p8},
                                       {{5, 6}, p8},
                                       {{7, 8}, p8},
                                       {{1, 2, 3, 4}, m8},
                                       {{1, 2, 5, 6}, m8},
                                       {{1, 2, 7, 8}, m8}},
                                      cis(kPi / 8));
               },
               [](const Params&) { return cn_phase(3, kPi); });
  program_gate("CCPhase", "seven phi/8 rotations", 3, {1.3},
               [](const Params& p) {
                 const Angle a = Angle::radians(p[0] / 8), b = Angle::radians(-p[0] / 8);
                 return steps_program({{{1, 2}, a},
                                       {{3, 4}, a},
                                       {{5, 6}, a},
                                       {{7, 8}, a},
                                       {{1, 2, 3, 4}, b},
                                       {{1, 2, 5, 6}, b},
                                       {{1, 2, 7, 8}, b}},
                                      cis(p[0] / 8));
               },
               [](const Params& p) { return cn_phase(3, p[0]); });
  const Angle p4 = Angle::pi_times(1, 4), m4 = Angle::pi_times(-1, 4);
  program_gate("CZ_3_2", "controlled-Z between logical qubits 3 and 2", 3, {},
               [=](const Params&) {
                 return steps_program({{{5, 6}, p4}, {{7, 8}, p4}, {{1, 2, 3, 4}, m4}},
                                      cis(kPi / 4));
               },
               [](const Params&) { return cz_between(3, 3, 2); });
  program_gate("CZ_3_1", "controlled-Z between logical qubits 3 and 1", 3, {},
               [=](const Params&) {
                 return steps_program({{{3, 4}, p4}, {{7, 8}, p4}, {{1, 2, 5, 6}, m4}},
                                      cis(kPi / 4));
               },
               [](const Params&) { return cz_between(3, 3, 1); });
  program_gate("CZ_2_1", "controlled-Z between logical qubits 2 and 1", 3, {},
               [=](const Params&) {
                 return steps_program({{{3, 4}, p4}, {{5, 6}, p4}, {{1, 2, 7, 8}, m4}},
                                      cis(kPi / 4));
               },
               [](const Params&) { return cz_between(3, 2, 1); });
  program_gate("Toffoli", "H on qubit 1 around CCZ", 3, {},
               [](const Params&) { return synth_cn_not(2, 1); },
               [](const Params&) { return cn_not(3, 1); });
  program_gate("Fredkin", "three Toffoli gates with targets 1, 2, 1", 3, {},
               [](const Params&) { return synth_cn_swap(1); },
               [](const Params&) { return cn_swap(3); });

  // Four logical qubits. The sign on the (5,6,7,8) rotation follows the Walsh
  // coefficient of Z2 Z3, which is negative.
  program_gate("C3Phase", "fifteen phi/16 rotations", 4, {0.8},
               [](const Params& p) {
                 const Angle a = Angle::radians(p[0] / 16), b = Angle::radians(-p[0] / 16);
                 return steps_program({{{1, 2}, b},
                                       {{3, 4}, a},
                                       {{5, 6}, a},
                                       {{7, 8}, a},
                                       {{9, 10}, a},
                                       {{1, 2, 3, 4}, a},
                                       {{1, 2, 5, 6}, a},
                                       {{1, 2, 7, 8}, a},
                                       {{1, 2, 9, 10}, a},
                                       {{3, 4, 5, 6}, b},
                                       {{3, 4, 7, 8}, b},
                                       {{3, 4, 9, 10}, b},
                                       {{5, 6, 7, 8}, b},
                                       {{5, 6, 9, 10}, b},
                                       {{7, 8, 9, 10}, b}},
                                      cis(p[0] / 16));
               },
               [](const Params& p) { return cn_phase(4, p[0]); });
  return c;
}

}  // namespace

Unitary reference_gate(const std::string& name, const std::vector<double>& params) {
  const auto& table = gate_factories();
  const auto it = table.find(name);
  if (it == table.end()) {
    const bool pauli = name.size() >= 2 && name.size() <= 11 &&
                       name.find_first_not_of("IXYZ") == std::string::npos;
    if (!pauli) throw MajoranaError(ErrorKind::UnknownGate, name);
    expect_params(name, params, 0);
    return gates::pauli_string(name);
  }
  expect_params(name, params, it->second.num_params);
  return it->second.make(params);
}

std::vector<std::string> reference_gate_names() {
  std::vector<std::string> names;
  for (const auto& [name, factory] : gate_factories()) names.push_back(name);
  return names;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  const auto& entries = catalog();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) throw MajoranaError(ErrorKind::UnknownGate, name);
  return *it;
}

MajoranaProgram catalog_program(const std::string& name, const std::vector<double>& params) {
  const CatalogEntry& e = catalog_entry(name);
  return e.program(params.empty() ? e.default_params : params);
}

Unitary realize_logical(int num_logical, const MajoranaProgram& program) {
  const Encoding enc(num_logical);
  if (program.max_index() > enc.num_majoranas()) {
    throw MajoranaError(ErrorKind::IndexOutOfRange,
                        "program uses gamma_" + std::to_string(program.max_index()) +
                            " but only " + std::to_string(enc.num_majoranas()) +
                            " Majoranas exist");
  }
  const FockSpace space = build_fock(enc.num_majoranas());
  return restrict_to_logical(enc, run_program(space, program));
}

VerifyReport verify_entry(const CatalogEntry& entry, const std::vector<double>& params,
                          double eps) {
  const Params& p = params.empty() ? entry.default_params : params;
  if (p.size() != entry.default_params.size()) {
    throw MajoranaError(ErrorKind::BadParams, entry.name + ": wrong parameter count");
  }
  const MajoranaProgram program = entry.program(p);
  const Unitary ref = entry.reference(p);
  VerifyReport report;
  report.name = entry.name;
  if (entry.kind == EntryKind::Gate) {
    const Unitary realized = realize_logical(entry.num_logical, program);
    const PhaseMatch m = equal_up_to_phase(realized, ref, eps);
    report.fidelity = m.fidelity;
    report.phase = m.phase;
    report.pass = m.equal;
    report.prefactor_exact = (realized - ref).cwiseAbs().maxCoeff() <= eps;
    return report;
  }
  const Encoding enc(entry.num_logical);
  const FockSpace space = build_fock(enc.num_majoranas());
  StateVector zero = StateVector::Zero(enc.logical_dimension());
  zero(0) = 1.0;
  const StateVector out =
      restrict_state(enc, apply_program(space, program, embed_state(enc, zero)));
  const StateVector target = ref.col(0);
  const Complex overlap = out.dot(target);  // <out|target>
  report.fidelity = std::abs(overlap);
  report.phase = report.fidelity > 0 ? overlap / report.fidelity : Complex{1.0, 0.0};
  report.pass = report.fidelity >= 1.0 - eps;
  report.prefactor_exact = (out - target).cwiseAbs().maxCoeff() <= eps;
  return report;
}

VerifyReport verify_entry(const std::string& name, double eps) {
  const CatalogEntry& e = catalog_entry(name);
  return verify_entry(e, e.default_params, eps);
}

nlohmann::json catalog_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : catalog()) {
    const MajoranaProgram program = e.program(e.default_params);
    out.push_back({{"name", e.name},
                   {"description", e.description},
                   {"kind", e.kind == EntryKind::Gate ? "gate" : "state"},
                   {"num_logical", e.num_logical},
                   {"default_params", e.default_params},
                   {"claimed_prefactor", complex_to_json(program.prefactor)},
                   {"program", program_to_json(program, 2 * e.num_logical + 2)}});
  }
  return {{"version", kDocumentVersion}, {"entries", out}};
}

}  // namespace majorana
