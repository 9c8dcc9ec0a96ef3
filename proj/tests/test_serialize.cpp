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


#include <random>

#include "doctest.h"
#include "majorana/catalog.hpp"
#include "majorana/serialize.hpp"
#include "oracle.hpp"

using namespace majorana;
using nlohmann::json;

TEST_CASE("program round trip keeps exact and float angles") {
  MajoranaProgram p;
  p.prefactor = std::exp(Complex(0, 0.3));
  p.steps.push_back({{1, 2}, Angle::pi_times(-3, 8)});
  p.steps.push_back({{2, 3, 4, 5}, Angle::radians(0.1234567890123456789)});
  p.steps.push_back({{3, 6}, Angle::pi_times(1, 4)});
  const json doc = program_to_json(p, 6);
  CHECK(doc["version"] == kDocumentVersion);
  CHECK(doc["steps"][0]["angle"]["times_pi"] == true);
  CHECK(doc["steps"][1]["angle"].is_number());

  int m = 0;
  const MajoranaProgram q = program_from_json(json::parse(doc.dump()), &m);
  CHECK(m == 6);
  REQUIRE(q.steps.size() == 3);
  CHECK(q.prefactor == p.prefactor);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(q.steps[i].indices == p.steps[i].indices);
    CHECK(q.steps[i].angle.is_exact() == p.steps[i].angle.is_exact());
    CHECK(q.steps[i].angle.value() == p.steps[i].angle.value());
  }
  CHECK(*q.steps[0].angle.pi_multiple() == Rational::make(-3, 8));
}

TEST_CASE("every catalog program survives serialization") {
  for (const auto& e : catalog()) {
    const MajoranaProgram p = e.program(e.default_params);
    const int m = 2 * e.num_logical + 2;
    const MajoranaProgram q = program_from_json(json::parse(program_to_json(p, m).dump()));
    CHECK(oracle::max_abs(realize_logical(e.num_logical, p) - realize_logical(e.num_logical, q)) == 0.0);
  }
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-1.0) == "-1");
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("matrix documents round trip bit for bit") {
  std::mt19937_64 rng(4);
  const Unitary u = oracle::random_unitary(8, rng);
  const std::string text = matrix_document(u, "logical");
  const json doc = json::parse(text);
  CHECK(doc["basis"] == "logical");
  CHECK(doc["rows"] == 8);
  CHECK(doc["cols"] == 8);
  const Unitary back = matrix_from_json(doc);
  CHECK((back - u).cwiseAbs().maxCoeff() == 0.0);
  Unitary z = Unitary::Zero(1, 1);
  z(0, 0) = Complex(-0.0, -0.0);
  CHECK(matrix_document(z, "physical").find("-0") == std::string::npos);
}

TEST_CASE("malformed documents raise parse errors") {
  auto kind_of = [](const json& doc) {
    try {
      program_from_json(doc);
    } catch (const MajoranaError& e) {
      return e.kind();
    }
    return ErrorKind::NotExact;  // sentinel: nothing was thrown
  };
  CHECK(kind_of(json::object()) == ErrorKind::Parse);
  CHECK(kind_of(json{{"version", 2}, {"num_majoranas", 4}, {"prefactor", {{"re", 1}, {"im", 0}}}, {"steps", json::array()}}) ==
        ErrorKind::Parse);
  CHECK(kind_of(json{{"version", 1}, {"num_majoranas", 4}, {"prefactor", {{"re", 1}, {"im", 0}}},
                     {"steps", {{{"indices", {1, 2}}, {"angle", "x"}}}}}) == ErrorKind::Parse);
  CHECK(kind_of(json{{"version", 1}, {"num_majoranas", 4}, {"prefactor", {{"re", 1}, {"im", 0}}},
                     {"steps", {{{"indices", {1, 2}}, {"angle", {{"numerator", 1}, {"denominator", 4}, {"times_pi", false}}}}}}}) ==
        ErrorKind::Parse);
  CHECK_THROWS_AS(matrix_from_json(json{{"rows", 2}, {"cols", 2}, {"entries", {{{{1, 0}}}}}}), MajoranaError);
  CHECK_THROWS_AS(matrix_from_json(json{{"rows", "two"}}), MajoranaError);
  CHECK(std::abs(complex_from_json(complex_to_json(Complex(0.25, -2))) - Complex(0.25, -2)) == 0.0);
}
