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


#include <set>

#include "doctest.h"
#include "majorana/catalog.hpp"
#include "majorana/fock.hpp"
#include "majorana/serialize.hpp"
#include "oracle.hpp"

using namespace majorana;

namespace {

constexpr double kTight = 1e-12;

double err(const Unitary& a, const Unitary& b) { return (a - b).cwiseAbs().maxCoeff(); }

Unitary braid_word(int n, std::initializer_list<int> word, Complex pref = 1.0) {
  return realize_logical(n, braid_program(word, pref));
}

}  // namespace

TEST_CASE("reference gates") {
  CHECK(err(reference_gate("CZ"), gates::diagonal({1, 1, 1, -1})) == 0.0);
  Unitary ms(4, 4);
  ms << 1, 0, 0, kI, 0, 1, -kI, 0, 0, -kI, 1, 0, kI, 0, 0, 1;
  CHECK(err(reference_gate("MS"), ms / std::sqrt(2.0)) < kTight);
  const double t = 0.83;
  CHECK(err(reference_gate("Rz", {t}),
            gates::diagonal({std::exp(Complex(0, -t / 2)), std::exp(Complex(0, t / 2))})) < kTight);
  CHECK(err(reference_gate("ZZ"), gates::kron(gates::z(), gates::z())) == 0.0);
  CHECK(err(reference_gate("CnNOT", {2}), reference_gate("Toffoli")) == 0.0);
  CHECK_THROWS_AS(reference_gate("nosuchgate"), MajoranaError);
  try {
    reference_gate("Rz");
    FAIL("expected BadParams");
  } catch (const MajoranaError& e) {
    CHECK(e.kind() == ErrorKind::BadParams);
  }
  for (const auto& name : reference_gate_names()) {
    std::vector<double> params;
    if (name == "CnZ" || name == "CnNOT" || name == "CnSWAP") params = {2};
    else if (name == "CnPhase") params = {2, 0.3};
    else if (name == "CU") params = {0.1, 0.2, 0.3};
    else if (name == "Rx" || name == "Ry" || name == "Rz" || name == "Phase" || name == "Uzz" ||
             name == "Uxx" || name == "CPhase" || name == "CCPhase") params = {0.4};
    const Unitary u = reference_gate(name, params);
    CHECK_MESSAGE(err(u.adjoint() * u, Unitary::Identity(u.rows(), u.cols())) < kTight, name);
  }
}

TEST_CASE("every catalog entry verifies") {
  CHECK(catalog().size() >= 30);
  std::set<std::string> names;
  for (const auto& e : catalog()) {
    CHECK(names.insert(e.name).second);
    const MajoranaProgram p = e.program(e.default_params);
    CHECK(p.max_index() <= 2 * (e.num_logical + 1));
    const VerifyReport r = verify_entry(e, e.default_params);
    CHECK_MESSAGE(r.pass, e.name);
    CHECK(r.fidelity >= 1 - 1e-9);
    const VerifyReport again = verify_entry(e, e.default_params);
    CHECK(again.fidelity == r.fidelity);
  }
}

TEST_CASE("recorded prefactors") {
  // These identities hold including their scalar.
  for (const char* name : {"S", "SqrtX", "Z", "X", "H", "T", "CZ", "CNOT", "SWAP", "ACNOT",
                           "iSWAP", "DCNOT", "MS", "CR", "H2", "CCZ", "EvenCat", "OddCat"}) {
    CHECK_MESSAGE(verify_entry(name).prefactor_exact, name);
  }
  // These hold only up to phase; the residual phase is pinned here.
  const VerifyReport y = verify_entry("Y");
  CHECK_FALSE(y.prefactor_exact);
  CHECK(std::abs(y.phase - kI) < kTight);
  const VerifyReport hh = verify_entry("HxH");
  CHECK_FALSE(hh.prefactor_exact);
  CHECK(std::abs(hh.phase - kI) < kTight);
  const VerifyReport eq = verify_entry("EqualCoefficient2");
  CHECK_FALSE(eq.prefactor_exact);
  CHECK(std::abs(eq.phase - std::exp(Complex(0, kPi / 4))) < kTight);
}

TEST_CASE("catalog programs") {
  const MajoranaProgram h = catalog_program("H");
  REQUIRE(h.steps.size() == 3);
  CHECK(h.steps[0].indices == std::vector<int>{2, 3});
  CHECK(h.steps[1].indices == std::vector<int>{3, 4});
  CHECK(h.steps[2].indices == std::vector<int>{2, 3});
  for (const auto& s : h.steps) CHECK(*s.angle.pi_multiple() == Rational::make(1, 4));
  CHECK(std::abs(h.prefactor - kI) < kTight);

  const MajoranaProgram ccz = catalog_program("CCZ");
  int two = 0, four = 0;
  for (const auto& s : ccz.steps) {
    if (s.body() == 2) {
      ++two;
      CHECK(*s.angle.pi_multiple() == Rational::make(1, 8));
    } else {
      ++four;
      CHECK(*s.angle.pi_multiple() == Rational::make(-1, 8));
    }
  }
  CHECK(two == 4);
  CHECK(four == 3);
  CHECK(std::abs(ccz.prefactor - std::exp(Complex(0, kPi / 8))) < kTight);

  const MajoranaProgram eq = catalog_program("EqualCoefficient2");
  CHECK(eq.steps.size() == 5);
  CHECK_THROWS_AS(catalog_program("nope"), MajoranaError);
}

TEST_CASE("inverse braid equals the cubed braid up to sign") {
  const FockSpace s = build_fock(6);
  for (int a = 1; a < 6; ++a) {
    const Unitary inv = run_program(s, braid_program({-a}));
    const Unitary b = braid(s, a);
    CHECK(err(b * b * b, -inv) < kTight);
    CHECK(equal_up_to_phase(b * b * b, inv, 1e-12).equal);
  }
}

TEST_CASE("Pauli algebra from braids on every width") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Encoding enc(n);
      const FockSpace s = build_fock(enc.num_majoranas());
      auto sq = [&](int a) { return Unitary(braid(s, a) * braid(s, a)); };
      const Unitary z_phys = sq(2 * k + 1);
      // Logical X_k flips physical qubit k+1 and the parity qubit.
      Unitary x_phys = sq(2);
      for (int j = 2; j <= k; ++j) x_phys = sq(2 * j) * x_phys;
      const Unitary z = restrict_to_logical(enc, z_phys), x = restrict_to_logical(enc, x_phys);
      std::string zl(n, 'I'), xl(n, 'I'), yl(n, 'I');
      zl[n - k] = 'Z';
      xl[n - k] = 'X';
      yl[n - k] = 'Y';
      const PhaseMatch mz = equal_up_to_phase(z, gates::pauli_string(zl), 1e-12);
      const PhaseMatch mx = equal_up_to_phase(x, gates::pauli_string(xl), 1e-12);
      REQUIRE(mz.equal);
      REQUIRE(mx.equal);
      const Unitary zn = mz.phase * z, xn = mx.phase * x;
      const Unitary yn = kI * xn * zn;
      const Unitary id = Unitary::Identity(z.rows(), z.cols());
      CHECK(err(xn * xn, id) < kTight);
      CHECK(err(zn * zn, id) < kTight);
      CHECK(err(yn * yn, id) < kTight);
      CHECK(err(yn, gates::pauli_string(yl)) < kTight);
    }
  }
}

TEST_CASE("Hadamard relation and embedded CZ negative control") {
  const Unitary cnot = catalog_entry("CNOT").reference({});
  CHECK(err(gates::hadamard_all(2), cnot * gates::entangling_hadamard()) < kTight);

  const Unitary emb = braid_word(3, {-5, -3, 1}, std::exp(Complex(0, -kPi / 4)));
  CHECK(err(emb, gates::diagonal({1, 1, 1, -1, kI, -kI, -kI, -kI})) < kTight);
  CHECK_FALSE(equal_up_to_phase(emb, gates::kron(gates::identity(1), gates::cz())).equal);
}

TEST_CASE("cat states") {
  const Encoding enc(1);
  const FockSpace s = build_fock(4);
  StateVector zero = StateVector::Zero(2);
  zero(0) = 1;
  auto prepare = [&](std::initializer_list<int> word, Complex pref) {
    return restrict_state(enc, apply_program(s, braid_program(word, pref), embed_state(enc, zero)));
  };
  const double h = 1 / std::sqrt(2.0);
  const StateVector even = prepare({1, 2}, std::exp(Complex(0, kPi / 4)));
  const StateVector odd = prepare({-1, 2}, std::exp(Complex(0, -kPi / 4)));
  CHECK(std::abs(even(0) - h) < kTight);
  CHECK(std::abs(even(1) - h) < kTight);
  CHECK(std::abs(odd(0) - h) < kTight);
  CHECK(std::abs(odd(1) + h) < kTight);
}

TEST_CASE("controlled phase sign assignment") {
  // The verifying assignment is B5(t) B3(t) B1(-t) = e^{-it} diag(1,1,1,e^{4it}).
  const double t = 0.3;
  MajoranaProgram p;
  p.steps = {{{1, 2}, Angle::radians(-t)}, {{3, 4}, Angle::radians(t)}, {{5, 6}, Angle::radians(t)}};
  CHECK(err(realize_logical(2, p), std::exp(Complex(0, -t)) * gates::controlled_phase(4 * t)) < kTight);
  MajoranaProgram swapped = p;
  swapped.steps[0].angle = Angle::radians(t);
  swapped.steps[2].angle = Angle::radians(-t);
  CHECK_FALSE(equal_up_to_phase(realize_logical(2, swapped), gates::controlled_phase(4 * t)).equal);
}

TEST_CASE("catalog export") {
  const nlohmann::json doc = catalog_json();
  CHECK(doc["entries"].size() == catalog().size());
  for (const auto& entry : doc["entries"]) {
    int m = 0;
    const MajoranaProgram p = program_from_json(entry["program"], &m);
    CHECK(m == 2 * entry["num_logical"].get<int>() + 2);
    const CatalogEntry& e = catalog_entry(entry["name"].get<std::string>());
    if (e.kind == EntryKind::Gate) {
      CHECK(err(realize_logical(e.num_logical, p), realize_logical(e.num_logical, e.program(e.default_params))) == 0.0);
    }
  }
}
