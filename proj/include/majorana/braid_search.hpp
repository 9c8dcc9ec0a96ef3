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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "majorana/cyclotomic.hpp"
#include "majorana/encoding.hpp"
#include "majorana/fock.hpp"

namespace majorana {

inline constexpr std::size_t kDefaultElementCap = 2'000'000;

enum class EnumerationMode { Exact, Float };

struct GroupEnumeration {
  std::vector<int> generators;
  std::uint64_t order_projective = 0;
  std::uint64_t order_linear = 0;
  bool completed = false;
};

/// Adjacent braids B_1 .. B_{M-1}.
std::vector<int> adjacent_generators(int num_majoranas);

/// BFS closure of the group generated by the braids and their inverses. When
/// the element cap is hit the result is partial and `completed` is false.
GroupEnumeration enumerate_group(const FockSpace& space, std::vector<int> generators = {},
                                 EnumerationMode mode = EnumerationMode::Exact,
                                 std::size_t element_cap = kDefaultElementCap);

/// Same closure in exact mode, keeping every linear element.
struct GroupElements {
  GroupEnumeration summary;
  std::vector<ExactMatrix> elements;
};
GroupElements enumerate_elements(const FockSpace& space, std::vector<int> generators = {},
                                 std::size_t element_cap = kDefaultElementCap);

/// Phase-normalized key of a floating matrix: the first entry with modulus
/// above 1e-6 is rotated to the positive real axis and all parts are rounded
/// to a 2^-20 grid.
std::string float_projective_key(const Unitary& u);
std::string float_linear_key(const Unitary& u);

/// Braid word in operator-product order: {-5, 1} is B5^-1 B1 (B1 acts first).
using BraidWord = std::vector<int>;
std::string word_to_string(const BraidWord& word);
std::vector<std::string> word_to_labels(const BraidWord& word);

struct SearchResult {
  bool found = false;
  BraidWord word;
  int depth_searched = 0;        // every word up to this length was covered
  bool group_exhausted = false;  // BFS closed before the depth limit
  std::uint64_t elements_visited = 0;
};

/// Shortest braid word whose logical restriction equals `target` up to phase.
/// Among shortest words, those avoiding B1 are preferred (they embed into wider
/// registers unchanged); remaining ties go to the lexicographically smallest
/// word in application order with B_a before B_a^-1 before B_{a+1}.
SearchResult search_word(const Encoding& enc, const Unitary& target, int max_depth,
                         std::vector<int> generators = {}, double eps = 1e-9,
                         std::size_t element_cap = kDefaultElementCap);

struct OrbitState {
  StateVector state;  // logical amplitudes
  BraidWord word;
};

struct OrbitResult {
  std::vector<OrbitState> states;
  bool completed = false;
};

OrbitResult orbit_states(const Encoding& enc, const StateVector& initial,
                         std::vector<int> generators = {},
                         std::size_t state_cap = kDefaultElementCap);

/// Index of the orbit state equal to `target` up to phase, if any.
std::optional<std::size_t> find_in_orbit(const OrbitResult& orbit, const StateVector& target,
                                         double eps = 1e-9);

int nonzero_amplitudes(const StateVector& state, double tol = 1e-9);

struct AmplitudeCertificate {
  std::string method;           // "full-orbit" or "amplitude-count"
  std::vector<int> counts;      // distinct nonzero-amplitude counts seen in the orbit
  int target_count = 0;
  bool target_absent = false;
  std::uint64_t orbit_size = 0;
};

/// Certifies that `target` is not reachable. With a completed orbit the
/// answer is a direct membership check; otherwise it rests on the observed
/// amplitude counts, which is recorded in `method`.
AmplitudeCertificate amplitude_certificate(const OrbitResult& orbit, const StateVector& target,
                                           double eps = 1e-9);

struct DiagonalCertificate {
  std::string target;
  std::vector<int> generators;
  int exponent_range = 4;
  std::uint64_t combinations_checked = 0;
  bool found = false;
  std::vector<int> exponents;  // first hit in lexicographic order
  std::string timestamp;
};

/// Tries every product B_{g1}^{e1} ... B_{gk}^{ek}, e in [0, exponent_range).
DiagonalCertificate check_diagonal_impossibility(const Encoding& enc, const Unitary& target,
                                                 const std::vector<int>& generators,
                                                 int exponent_range = 4,
                                                 const std::string& target_name = "",
                                                 double eps = 1e-9);

nlohmann::json to_json(const GroupEnumeration& e);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const DiagonalCertificate& c);
nlohmann::json to_json(const AmplitudeCertificate& c);

}  // namespace majorana
