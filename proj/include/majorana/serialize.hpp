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

#include <string>

#include "json.hpp"
#include "majorana/fock.hpp"

namespace majorana {

inline constexpr int kDocumentVersion = 1;

/// Exact angles are stored as {numerator, denominator, times_pi}; others as a
/// plain radian number. Round trips are lossless.
nlohmann::json program_to_json(const MajoranaProgram& program, int num_majoranas);
MajoranaProgram program_from_json(const nlohmann::json& doc, int* num_majoranas = nullptr);

/// Matrix document with every real and imaginary part printed to 17
/// significant digits and negative zero written as 0.
std::string matrix_document(const Unitary& matrix, const std::string& basis);
Unitary matrix_from_json(const nlohmann::json& doc);

/// 17 significant digits, "-0" normalized.
std::string format_double(double value);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& doc);

}  // namespace majorana
