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


#include "majorana/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace majorana {

using nlohmann::json;

json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& doc) {
  return {doc.at("re").get<double>(), doc.at("im").get<double>()};
}

json program_to_json(const MajoranaProgram& program, int num_majoranas) {
  json steps = json::array();
  for (const auto& step : program.steps) {
    json angle;
    if (step.angle.is_exact()) {
      const Rational& r = *step.angle.pi_multiple();
      angle = {{"numerator", r.num}, {"denominator", r.den}, {"times_pi", true}};
    } else {
      angle = step.angle.value();
    }
    steps.push_back({{"indices", step.indices}, {"angle", angle}});
  }
  return {{"version", kDocumentVersion},
          {"num_majoranas", num_majoranas},
          {"prefactor", complex_to_json(program.prefactor)},
          {"steps", steps}};
}

MajoranaProgram program_from_json(const json& doc, int* num_majoranas) {
  try {
    if (doc.at("version").get<int>() != kDocumentVersion) {
      throw MajoranaError(ErrorKind::Parse, "unsupported document version");
    }
    const int m = doc.at("num_majoranas").get<int>();
    if (num_majoranas != nullptr) *num_majoranas = m;
    MajoranaProgram program;
    program.prefactor = complex_from_json(doc.at("prefactor"));
    for (const auto& s : doc.at("steps")) {
      MajoranaStep step;
      step.indices = s.at("indices").get<std::vector<int>>();
      const json& a = s.at("angle");
      if (a.is_object()) {
        if (!a.value("times_pi", true)) {
          throw MajoranaError(ErrorKind::Parse, "exact angles must set times_pi");
        }
        step.angle = Angle::pi_times(a.at("numerator").get<std::int64_t>(),
                                     a.at("denominator").get<std::int64_t>());
      } else {
        step.angle = Angle::radians(a.get<double>());
      }
      program.steps.push_back(std::move(step));
    }
    return program;
  } catch (const json::exception& e) {
    throw MajoranaError(ErrorKind::Parse, e.what());
  }
}

std::string format_double(double value) {
  if (value == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string matrix_document(const Unitary& matrix, const std::string& basis) {
  std::ostringstream out;
  out << "{\"version\":" << kDocumentVersion << ",\"basis\":\"" << basis
      << "\",\"rows\":" << matrix.rows() << ",\"cols\":" << matrix.cols()
      << ",\"entries\":[";
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    out << (r ? ",[" : "[");
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      out << (c ? ",[" : "[") << format_double(matrix(r, c).real()) << ','
          << format_double(matrix(r, c).imag()) << ']';
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

Unitary matrix_from_json(const json& doc) {
  try {
    const auto rows = doc.at("rows").get<Eigen::Index>();
    const auto cols = doc.at("cols").get<Eigen::Index>();
    const json& entries = doc.at("entries");
    if (static_cast<Eigen::Index>(entries.size()) != rows) {
      throw MajoranaError(ErrorKind::DimensionMismatch, "row count disagrees with entries");
    }
    Unitary m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (static_cast<Eigen::Index>(entries[r].size()) != cols) {
        throw MajoranaError(ErrorKind::DimensionMismatch, "ragged matrix row");
      }
      for (Eigen::Index c = 0; c < cols; ++c) {
        m(r, c) = {entries[r][c][0].get<double>(), entries[r][c][1].get<double>()};
      }
    }
    return m;
  } catch (const json::exception& e) {
    throw MajoranaError(ErrorKind::Parse, e.what());
  }
}

}  // namespace majorana
