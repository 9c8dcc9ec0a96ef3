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


#include <cmath>
#include <random>

#include "doctest.h"
#include "majorana/fock.hpp"
#include "oracle.hpp"

using namespace majorana;

namespace {

constexpr double kTight = 1e-12;

Unitary identity_of(const FockSpace& s) {
  const auto d = static_cast<Eigen::Index>(s.dimension());
  return Unitary::Identity(d, d);
}

double err(const Unitary& a, const Unitary& b) { return (a - b).cwiseAbs().maxCoeff(); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const MajoranaError& e) {
    return e.kind();
  }
  FAIL("expected MajoranaError");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("build_fock dimensions and errors") {
  CHECK(build_fock(2).dimension() == 2);
  CHECK(build_fock(4).dimension() == 4);
  CHECK(build_fock(8).dimension() == 16);
  CHECK(build_fock(8).num_physical_qubits() == 4);
  CHECK(kind_of([] { build_fock(5); }) == ErrorKind::OddMajoranaCount);
  CHECK(kind_of([] { build_fock(26); }) == ErrorKind::CapExceeded);
  CHECK(kind_of([] { build_fock(10, 8); }) == ErrorKind::CapExceeded);
  CHECK(build_fock(26, 26).dimension() == 8192);
}

TEST_CASE("Majorana matrices match a Jordan-Wigner construction") {
  for (int m = 2; m <= 10; m += 2) {
    const FockSpace s = build_fock(m);
    for (int a = 1; a <= m; ++a) {
      CHECK(err(majorana_matrix(s, a), oracle::majorana(m, a)) < kTight);
    }
  }
  const FockSpace s2 = build_fock(2);
  Unitary g1(2, 2), g2(2, 2);
  g1 << 0, 1, 1, 0;
  g2 << 0, Complex(0, -1), Complex(0, 1), 0;
  CHECK(err(majorana_matrix(s2, 1), g1) < kTight);
  CHECK(err(majorana_matrix(s2, 2), g2) < kTight);
  CHECK(kind_of([&] { majorana_matrix(s2, 3); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("anticommutation and Hermiticity") {
  for (int m : {2, 4, 6, 8}) {
    const FockSpace s = build_fock(m);
    const Unitary id = identity_of(s);
    for (int a = 1; a <= m; ++a) {
      const Unitary ga = majorana_matrix(s, a);
      CHECK(err(ga, ga.adjoint()) < kTight);
      CHECK(err(ga * ga, id) < kTight);
      for (int b = a + 1; b <= m; ++b) {
        const Unitary gb = majorana_matrix(s, b);
        CHECK((ga * gb + gb * ga).cwiseAbs().maxCoeff() < kTight);
      }
    }
  }
}

TEST_CASE("apply_monomial agrees with dense products") {
  const FockSpace s = build_fock(8);
  const std::vector<std::vector<int>> sets = {{1}, {2, 5}, {1, 2, 3, 4}, {3, 6, 7, 8}, {1, 3, 5, 7, 8}};
  for (const auto& idx : sets) {
    Unitary dense = identity_of(s);
    for (int i : idx) dense = majorana_matrix(s, i) * dense;
    for (std::size_t j = 0; j < s.dimension(); ++j) {
      const BasisImage img = apply_monomial(idx, j);
      for (std::size_t r = 0; r < s.dimension(); ++r) {
        const Complex expected = r == img.index ? img.amplitude : Complex{};
        CHECK(std::abs(dense(r, j) - expected) < kTight);
      }
    }
  }
}

TEST_CASE("pair rotation examples") {
  const FockSpace s = build_fock(4);
  const double t = 0.37;
  const Complex em = std::exp(Complex(0, -t)), ep = std::exp(Complex(0, t));
  Unitary expected = Unitary::Zero(4, 4);
  expected.diagonal() << em, ep, em, ep;
  CHECK(err(pair_rotation(s, 1, 2, t), expected) < kTight);

  const Unitary b2 = pair_rotation(s, 2, 3, t);
  for (int j = 0; j < 4; ++j) CHECK(std::abs(b2(j, j) - std::cos(t)) < kTight);
  for (int j = 0; j < 4; ++j) {
    CHECK(std::abs(std::abs(b2(j, 3 - j)) - std::sin(t)) < kTight);
    CHECK(std::abs(b2(j, 3 - j).real()) < kTight);
  }
  CHECK(err(pair_rotation(s, 1, 3, 0.0), identity_of(s)) < kTight);
  CHECK(kind_of([&] { pair_rotation(s, 2, 2, t); }) == ErrorKind::EqualIndices);
  CHECK(kind_of([&] { pair_rotation(s, 1, 5, t); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("braid B1 on two physical qubits") {
  const FockSpace s = build_fock(4);
  Unitary expected = Unitary::Zero(4, 4);
  const Complex w = std::exp(Complex(0, -kPi / 4));
  expected.diagonal() << w, w * kI, w, w * kI;
  CHECK(err(braid(s, 1), expected) < kTight);
}

TEST_CASE("braid powers and inverses") {
  for (int m : {2, 4, 6, 8}) {
    const FockSpace s = build_fock(m);
    const Unitary id = identity_of(s);
    for (int a = 1; a < m; ++a) {
      const Unitary b = braid(s, a);
      const Unitary b4 = b * b * b * b;
      // The fourth power is -I; as a projective statement B^4 = 1.
      CHECK(err(b4, -id) < kTight);
      CHECK(std::abs((b4.adjoint() * id).trace()) / id.rows() > 1 - kTight);
      const Unitary inv = pair_rotation(s, a, a + 1, -kPi / 4);
      CHECK(err(b * inv, id) < kTight);
      CHECK(err(b * b * b, -inv) < kTight);
    }
  }
}

TEST_CASE("Artin relations up to M=10") {
  for (int m = 4; m <= 10; m += 2) {
    const FockSpace s = build_fock(m);
    std::vector<Unitary> b(m);
    for (int a = 1; a < m; ++a) b[a] = braid(s, a);
    for (int a = 1; a < m; ++a) {
      for (int c = a + 2; c < m; ++c) CHECK(err(b[a] * b[c], b[c] * b[a]) < kTight);
      if (a + 1 < m) CHECK(err(b[a] * b[a + 1] * b[a], b[a + 1] * b[a] * b[a + 1]) < kTight);
    }
  }
}

TEST_CASE("generalized four-body braid relations") {
  const int m = 12;
  const FockSpace s = build_fock(m);
  auto b4 = [&](int a) {
    const std::vector<int> idx{a, a + 1, a + 2, a + 3};
    return manybody_rotation(s, idx, kPi / 4);
  };
  const Unitary id = identity_of(s);
  for (int a = 1; a + 3 <= m; ++a) {
    const Unitary x = b4(a);
    for (int off : {1, 3}) {
      if (a + off + 3 > m) continue;
      const Unitary y = b4(a + off);
      CHECK(err(x * y * x, y * x * y) < kTight);
    }
    for (int off = 2; a + off + 3 <= m; ++off) {
      if (off == 3) continue;
      const Unitary y = b4(a + off);
      CHECK(err(x * y, y * x) < kTight);
    }
    Unitary mono = kI * id;
    for (int i = a; i <= a + 3; ++i) mono = majorana_matrix(s, i) * mono;
    CHECK(err(mono * mono, -id) < kTight);
  }
}

TEST_CASE("many-body rotation matches matrix exponential") {
  const int m = 8;
  const FockSpace s = build_fock(m);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  const std::vector<std::vector<int>> sets = {
      {1, 2}, {2, 7}, {1, 2, 3, 4}, {2, 3, 5, 8}, {1, 3, 4, 5, 6, 8}, {1, 2, 3, 4, 5, 6, 7, 8}};
  for (const auto& idx : sets) {
    const double t = angle(rng);
    CHECK(err(manybody_rotation(s, idx, t), oracle::rotation(m, idx, t)) < 1e-11);
  }
}

TEST_CASE("many-body rotation table rows on four physical qubits") {
  const FockSpace s = build_fock(8);
  const double t = 0.61;
  const std::vector<int> four{1, 2, 3, 4}, eight{1, 2, 3, 4, 5, 6, 7, 8};
  // Physical qubits 1 and 2 carry the Z string for (1,2,3,4).
  CHECK(err(manybody_rotation(s, four, t), oracle::zstring_exp(4, {1, 2}, t)) < kTight);
  CHECK(err(manybody_rotation(s, eight, t), oracle::zstring_exp(4, {1, 2, 3, 4}, t)) < kTight);
  CHECK(err(manybody_rotation(s, four, 0.0), identity_of(s)) < kTight);
}

TEST_CASE("unitarity and parity conservation") {
  const FockSpace s = build_fock(8);
  const Unitary p = total_parity(s);
  const Unitary id = identity_of(s);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  // Every even subset of {1..8}.
  for (unsigned mask = 1; mask < 256; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::vector<int> idx;
    for (int i = 0; i < 8; ++i) {
      if (mask & (1u << i)) idx.push_back(i + 1);
    }
    const Unitary u = manybody_rotation(s, idx, angle(rng));
    CHECK(err(u.adjoint() * u, id) < kTight);
    CHECK(err(u * p, p * u) < kTight);
  }
}

TEST_CASE("total parity") {
  Unitary p2 = Unitary::Zero(2, 2);
  p2.diagonal() << 1, -1;
  CHECK(err(total_parity(build_fock(2)), p2) < kTight);
  Unitary p4 = Unitary::Zero(4, 4);
  p4.diagonal() << 1, -1, -1, 1;
  CHECK(err(total_parity(build_fock(4)), p4) < kTight);
  const FockSpace s = build_fock(10);
  const Unitary p = total_parity(s);
  CHECK(err(p * p, identity_of(s)) < kTight);
}

TEST_CASE("conjugation law") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int m : {2, 4, 6, 8}) {
    const FockSpace s = build_fock(m);
    for (int a = 1; a <= m; ++a) {
      for (int b = a + 1; b <= m; ++b) {
        const double t = angle(rng);
        const Unitary u = pair_rotation(s, a, b, t);
        const Unitary ga = majorana_matrix(s, a), gb = majorana_matrix(s, b);
        CHECK(err(u * ga * u.adjoint(), std::cos(2 * t) * ga + std::sin(2 * t) * gb) < kTight);
        CHECK(err(u * gb * u.adjoint(), -std::sin(2 * t) * ga + std::cos(2 * t) * gb) < kTight);
      }
    }
  }
}

TEST_CASE("run_program equals the ordered dense product") {
  const FockSpace s = build_fock(8);
  MajoranaProgram p;
  p.steps = {{{1, 2}, Angle::radians(0.3)},
             {{2, 3, 4, 7}, Angle::radians(-1.1)},
             {{5, 6}, Angle::pi_times(1, 4)}};
  p.prefactor = std::exp(Complex(0, 0.4));
  Unitary dense = identity_of(s);
  for (const auto& step : p.steps) dense = oracle::rotation(8, step.indices, step.angle.value()) * dense;
  dense *= p.prefactor;
  CHECK(err(run_program(s, p), dense) < 1e-11);

  CHECK(err(run_program(s, MajoranaProgram{}), identity_of(s)) < kTight);
  const MajoranaProgram one = braid_program({1});
  CHECK(err(run_program(s, one), braid(s, 1)) < kTight);

  StateVector v = StateVector::Zero(16);
  v(5) = 1.0;
  CHECK((apply_program(s, p, v) - run_program(s, p) * v).cwiseAbs().maxCoeff() < kTight);
}

TEST_CASE("braid_program reverses the printed word") {
  const MajoranaProgram p = braid_program({-5, 1, 2});
  REQUIRE(p.steps.size() == 3);
  CHECK(p.steps[0].indices == std::vector<int>{2, 3});
  CHECK(p.steps[2].indices == std::vector<int>{5, 6});
  CHECK(p.steps[2].angle.pi_multiple() == Rational::make(-1, 4));
  CHECK(p.max_index() == 6);
  const MajoranaProgram q = braid_program({2}) * braid_program({1});
  CHECK(q.steps[0].indices == std::vector<int>{1, 2});
}

TEST_CASE("step validation") {
  const FockSpace s = build_fock(6);
  CHECK(kind_of([&] { validate_step(s, {{1, 2, 3}, Angle{}}); }) == ErrorKind::OddCardinality);
  CHECK(kind_of([&] { validate_step(s, {{}, Angle{}}); }) == ErrorKind::OddCardinality);
  CHECK(kind_of([&] { validate_step(s, {{1, 8}, Angle{}}); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([&] { validate_step(s, {{2, 2}, Angle{}}); }) == ErrorKind::EqualIndices);
  CHECK(kind_of([&] { validate_step(s, {{3, 2}, Angle{}}); }) == ErrorKind::BadParams);
  const std::vector<int> odd{1, 2, 3};
  CHECK(kind_of([&] { manybody_rotation(s, odd, 0.1); }) == ErrorKind::OddCardinality);
}

TEST_CASE("exact angles") {
  const Angle a = Angle::pi_times(1, 8) + Angle::pi_times(1, 8);
  REQUIRE(a.is_exact());
  CHECK(*a.pi_multiple() == Rational::make(1, 4));
  CHECK(std::abs(a.value() - kPi / 4) < kTight);
  CHECK_FALSE((a + Angle::radians(0.1)).is_exact());
  CHECK((-a).pi_multiple()->num == -1);
  CHECK(Rational::make(2, -4) == Rational::make(-1, 2));
  CHECK(Angle{}.is_exact());
}
