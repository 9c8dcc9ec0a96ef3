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


#include "majorana/braid_search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <set>
#include <unordered_set>

namespace majorana {
namespace {

constexpr double kGrid = 1048576.0;  // 2^20

struct Letter {
  int braid;
  bool inverse;
  int signed_label() const { return inverse ? -braid : braid; }
};

std::vector<int> normalize_generators(std::vector<int> generators, int num_majoranas) {
  if (generators.empty()) return adjacent_generators(num_majoranas);
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (int g : generators) {
    if (g < 1 || g >= num_majoranas) {
      throw MajoranaError(ErrorKind::IndexOutOfRange,
                          "braid B" + std::to_string(g) + " needs gamma_" +
                              std::to_string(g + 1));
    }
  }
  return generators;
}

std::vector<Letter> letters_for(const std::vector<int>& generators) {
  std::vector<Letter> out;
  for (int g : generators) {
    out.push_back({g, false});
    out.push_back({g, true});
  }
  return out;
}

void append_grid(std::string& out, double v) {
  const auto q = static_cast<std::int32_t>(std::llround(v * kGrid));
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((q >> (8 * b)) & 0xff));
}

template <typename Vec>
std::string grid_key(const Vec& values, Complex rotation) {
  std::string out;
  out.reserve(static_cast<std::size_t>(values.size()) * 8);
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const Complex z = values(i) * rotation;
    append_grid(out, z.real());
    append_grid(out, z.imag());
  }
  return out;
}

template <typename Vec>
Complex normalizing_rotation(const Vec& values) {
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double mag = std::abs(values(i));
    if (mag > 1e-6) return std::conj(values(i)) / mag;
  }
  return {1.0, 0.0};
}

Unitary logical_float_braid(const Encoding& enc, int alpha, bool inverse) {
  const FockSpace space = build_fock(enc.num_majoranas());
  const Unitary b = restrict_to_logical(enc, braid(space, alpha));
  return inverse ? Unitary(b.adjoint()) : b;
}

BraidWord printed_word(std::vector<int> application_order) {
  std::reverse(application_order.begin(), application_order.end());
  return application_order;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

GroupEnumeration float_enumeration(const FockSpace& space, const std::vector<int>& generators,
                                   std::size_t cap) {
  std::vector<Unitary> mats;
  for (const Letter& l : letters_for(generators)) {
    const Unitary b = braid(space, l.braid);
    mats.push_back(l.inverse ? Unitary(b.adjoint()) : b);
  }
  GroupEnumeration result;
  result.generators = generators;
  std::unordered_set<std::string> linear, projective;
  const std::size_t d = space.dimension();
  std::vector<Unitary> frontier{Unitary::Identity(d, d)};
  auto flat = [](const Unitary& u) { return u.reshaped<Eigen::RowMajor>(); };
  linear.insert(grid_key(flat(frontier[0]), 1.0));
  projective.insert(grid_key(flat(frontier[0]), 1.0));
  while (!frontier.empty()) {
    std::vector<Unitary> next;
    for (const Unitary& u : frontier) {
      for (const Unitary& g : mats) {
        Unitary v = g * u;
        const auto f = flat(v);
        if (!linear.insert(grid_key(f, 1.0)).second) continue;
        projective.insert(grid_key(f, normalizing_rotation(f)));
        if (linear.size() >= cap) {
          result.order_linear = linear.size();
          result.order_projective = projective.size();
          return result;
        }
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  result.order_linear = linear.size();
  result.order_projective = projective.size();
  result.completed = true;
  return result;
}

}  // namespace

std::vector<int> adjacent_generators(int num_majoranas) {
  std::vector<int> out;
  for (int a = 1; a < num_majoranas; ++a) out.push_back(a);
  return out;
}

GroupElements enumerate_elements(const FockSpace& space, std::vector<int> generators,
                                 std::size_t element_cap) {
  generators = normalize_generators(std::move(generators), space.num_majoranas());
  std::vector<ExactMatrix> mats;
  for (const Letter& l : letters_for(generators)) {
    mats.push_back(ExactMatrix::braid(space, l.braid, l.inverse));
  }
  GroupElements out;
  out.summary.generators = generators;
  std::unordered_set<std::string> linear, projective;
  const ExactMatrix id = ExactMatrix::identity(space.dimension());
  linear.insert(id.linear_key(true));
  projective.insert(id.projective_key(true));
  out.elements.push_back(id);
  std::size_t level_begin = 0;
  while (level_begin < out.elements.size()) {
    const std::size_t level_end = out.elements.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const ExactMatrix& g : mats) {
        ExactMatrix v = g * out.elements[i];
        if (!linear.insert(v.linear_key(true)).second) continue;
        projective.insert(v.projective_key(true));
        out.elements.push_back(std::move(v));
        if (linear.size() >= element_cap) {
          out.summary.order_linear = linear.size();
          out.summary.order_projective = projective.size();
          return out;
        }
      }
    }
    level_begin = level_end;
  }
  out.summary.order_linear = linear.size();
  out.summary.order_projective = projective.size();
  out.summary.completed = true;
  return out;
}

GroupEnumeration enumerate_group(const FockSpace& space, std::vector<int> generators,
                                 EnumerationMode mode, std::size_t element_cap) {
  if (mode == EnumerationMode::Exact) {
    return enumerate_elements(space, std::move(generators), element_cap).summary;
  }
  return float_enumeration(space, normalize_generators(std::move(generators), space.num_majoranas()),
                           element_cap);
}

std::string float_projective_key(const Unitary& u) {
  const auto f = u.reshaped<Eigen::RowMajor>();
  return grid_key(f, normalizing_rotation(f));
}

std::string float_linear_key(const Unitary& u) {
  return grid_key(u.reshaped<Eigen::RowMajor>(), 1.0);
}

std::string word_to_string(const BraidWord& word) {
  std::string out;
  for (const auto& label : word_to_labels(word)) {
    if (!out.empty()) out += ' ';
    out += label;
  }
  return out;
}

std::vector<std::string> word_to_labels(const BraidWord& word) {
  std::vector<std::string> out;
  for (int w : word) {
    out.push_back("B" + std::to_string(std::abs(w)) + (w < 0 ? "^-1" : ""));
  }
  return out;
}

namespace {

SearchResult bfs_search(const Encoding& enc, const Unitary& target, int max_depth,
                        const std::vector<int>& generators, double eps, std::size_t cap) {
  struct Node {
    ExactMatrix matrix;
    std::size_t parent;
    int letter;
  };
  const auto letters = letters_for(generators);
  std::vector<ExactMatrix> mats;
  for (const Letter& l : letters) mats.push_back(ExactMatrix::logical_braid(enc, l.braid, l.inverse));

  auto word_of = [](const std::vector<Node>& nodes, std::size_t i) {
    std::vector<int> application;
    for (; nodes[i].letter != 0; i = nodes[i].parent) application.push_back(nodes[i].letter);
    std::reverse(application.begin(), application.end());
    return printed_word(application);
  };

  SearchResult result;
  std::vector<Node> nodes{{ExactMatrix::identity(enc.logical_dimension()), 0, 0}};
  std::unordered_set<std::string> seen{nodes[0].matrix.projective_key()};
  if (equal_up_to_phase(nodes[0].matrix.to_unitary(), target, eps).equal) {
    result.found = true;
    result.elements_visited = 1;
    return result;
  }
  std::size_t level_begin = 0;
  for (int depth = 1; depth <= max_depth; ++depth) {
    const std::size_t level_end = nodes.size();
    if (level_begin == level_end) {
      result.group_exhausted = true;
      break;
    }
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t g = 0; g < mats.size(); ++g) {
        ExactMatrix v = mats[g] * nodes[i].matrix;
        if (!seen.insert(v.projective_key()).second) continue;
        const bool hit = equal_up_to_phase(v.to_unitary(), target, eps).equal;
        nodes.push_back({std::move(v), i, letters[g].signed_label()});
        if (hit) {
          result.found = true;
          result.word = word_of(nodes, nodes.size() - 1);
          result.depth_searched = depth;
          result.elements_visited = nodes.size();
          return result;
        }
        if (nodes.size() >= cap) {
          result.depth_searched = depth - 1;
          result.elements_visited = nodes.size();
          return result;
        }
      }
    }
    level_begin = level_end;
    result.depth_searched = depth;
  }
  if (level_begin == nodes.size()) result.group_exhausted = true;
  result.depth_searched = max_depth;
  result.elements_visited = nodes.size();
  return result;
}

}  // namespace

SearchResult search_word(const Encoding& enc, const Unitary& target, int max_depth,
                         std::vector<int> generators, double eps, std::size_t element_cap) {
  if (target.rows() != static_cast<Eigen::Index>(enc.logical_dimension()) ||
      target.cols() != target.rows()) {
    throw MajoranaError(ErrorKind::DimensionMismatch, "target must act on the logical space");
  }
  if (max_depth < 0) throw MajoranaError(ErrorKind::BadParams, "negative search depth");
  generators = normalize_generators(std::move(generators), enc.num_majoranas());
  SearchResult best = bfs_search(enc, target, max_depth, generators, eps, element_cap);
  const auto uses_first = [](const BraidWord& w) {
    return std::any_of(w.begin(), w.end(), [](int x) { return std::abs(x) == 1; });
  };
  if (best.found && uses_first(best.word) && generators.size() > 1 && generators[0] == 1) {
    const std::vector<int> rest(generators.begin() + 1, generators.end());
    const int length = static_cast<int>(best.word.size());
    SearchResult alt = bfs_search(enc, target, length, rest, eps, element_cap);
    if (alt.found && static_cast<int>(alt.word.size()) == length) {
      best.word = alt.word;
      best.elements_visited += alt.elements_visited;
    }
  }
  return best;
}

namespace {

std::string state_key(const StateVector& s) { return grid_key(s, normalizing_rotation(s)); }

}  // namespace

OrbitResult orbit_states(const Encoding& enc, const StateVector& initial,
                         std::vector<int> generators, std::size_t state_cap) {
  if (initial.size() != static_cast<Eigen::Index>(enc.logical_dimension())) {
    throw MajoranaError(ErrorKind::DimensionMismatch, "initial state dimension");
  }
  if (std::abs(initial.norm() - 1.0) > 1e-9) {
    throw MajoranaError(ErrorKind::BadParams, "initial state must be normalized");
  }
  generators = normalize_generators(std::move(generators), enc.num_majoranas());
  const auto letters = letters_for(generators);
  std::vector<Unitary> mats;
  for (const Letter& l : letters) mats.push_back(logical_float_braid(enc, l.braid, l.inverse));

  OrbitResult result;
  std::unordered_set<std::string> seen{state_key(initial)};
  result.states.push_back({initial, {}});
  std::size_t level_begin = 0;
  while (level_begin < result.states.size()) {
    const std::size_t level_end = result.states.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t g = 0; g < mats.size(); ++g) {
        StateVector next = mats[g] * result.states[i].state;
        if (!seen.insert(state_key(next)).second) continue;
        BraidWord word = result.states[i].word;
        word.insert(word.begin(), letters[g].signed_label());
        result.states.push_back({std::move(next), std::move(word)});
        if (result.states.size() >= state_cap) return result;
      }
    }
    level_begin = level_end;
  }
  result.completed = true;
  return result;
}

std::optional<std::size_t> find_in_orbit(const OrbitResult& orbit, const StateVector& target,
                                         double eps) {
  for (std::size_t i = 0; i < orbit.states.size(); ++i) {
    if (std::abs(target.dot(orbit.states[i].state)) >= 1.0 - eps) return i;
  }
  return std::nullopt;
}

int nonzero_amplitudes(const StateVector& state, double tol) {
  int n = 0;
  for (Eigen::Index i = 0; i < state.size(); ++i) n += std::abs(state(i)) > tol ? 1 : 0;
  return n;
}

AmplitudeCertificate amplitude_certificate(const OrbitResult& orbit, const StateVector& target,
                                           double eps) {
  AmplitudeCertificate cert;
  std::set<int> counts;
  for (const auto& s : orbit.states) counts.insert(nonzero_amplitudes(s.state));
  cert.counts.assign(counts.begin(), counts.end());
  cert.target_count = nonzero_amplitudes(target);
  cert.orbit_size = orbit.states.size();
  if (orbit.completed) {
    cert.method = "full-orbit";
    cert.target_absent = !find_in_orbit(orbit, target, eps).has_value();
  } else {
    cert.method = "amplitude-count";
    cert.target_absent = counts.count(cert.target_count) == 0;
  }
  return cert;
}

DiagonalCertificate check_diagonal_impossibility(const Encoding& enc, const Unitary& target,
                                                 const std::vector<int>& generators,
                                                 int exponent_range,
                                                 const std::string& target_name, double eps) {
  if (generators.empty() || exponent_range < 1) {
    throw MajoranaError(ErrorKind::BadParams, "need generators and a positive exponent range");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (std::abs(generators[i] - generators[j]) < 2) {
        throw MajoranaError(ErrorKind::NonCommutingGenerators,
                            "B" + std::to_string(generators[i]) + " and B" +
                                std::to_string(generators[j]) + " do not commute");
      }
    }
  }
  for (int g : generators) {
    if (g < 1 || g >= enc.num_majoranas()) {
      throw MajoranaError(ErrorKind::IndexOutOfRange, "braid B" + std::to_string(g));
    }
  }
  // powers[i][e] = B_{g_i}^e restricted to the code space
  std::vector<std::vector<Unitary>> powers;
  const auto d = static_cast<Eigen::Index>(enc.logical_dimension());
  for (int g : generators) {
    const Unitary b = logical_float_braid(enc, g, false);
    std::vector<Unitary> p{Unitary::Identity(d, d)};
    for (int e = 1; e < exponent_range; ++e) p.push_back(b * p.back());
    powers.push_back(std::move(p));
  }
  DiagonalCertificate cert;
  cert.target = target_name;
  cert.generators = generators;
  cert.exponent_range = exponent_range;
  cert.timestamp = utc_timestamp();
  std::vector<int> exps(generators.size(), 0);
  while (true) {
    Unitary product = Unitary::Identity(d, d);
    for (std::size_t i = 0; i < exps.size(); ++i) product = product * powers[i][exps[i]];
    ++cert.combinations_checked;
    if (!cert.found && equal_up_to_phase(product, target, eps).equal) {
      cert.found = true;
      cert.exponents = exps;
    }
    // Odometer with the first generator most significant.
    std::size_t pos = exps.size();
    while (pos > 0 && ++exps[pos - 1] == exponent_range) exps[--pos] = 0;
    if (pos == 0) break;
  }
  return cert;
}

nlohmann::json to_json(const GroupEnumeration& e) {
  return {{"generators", e.generators},
          {"order_projective", e.order_projective},
          {"order_linear", e.order_linear},
          {"completed", e.completed}};
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json out = {{"found", r.found},
                        {"depth_searched", r.depth_searched},
                        {"group_exhausted", r.group_exhausted},
                        {"elements_visited", r.elements_visited}};
  if (r.found) out["word"] = word_to_labels(r.word);
  return out;
}

nlohmann::json to_json(const DiagonalCertificate& c) {
  std::vector<std::string> gens;
  for (int g : c.generators) gens.push_back("B" + std::to_string(g));
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.generators.size(); ++i) total *= c.exponent_range;
  nlohmann::json out = {
      {"target", c.target},
      {"generators", gens},
      {"exhausted", {{"description", "every exponent pattern with each exponent in [0, " +
                                         std::to_string(c.exponent_range) + ")"},
                     {"combinations", c.combinations_checked},
                     {"expected", total}}},
      {"result", c.found ? "found" : "absent"},
      {"timestamp", c.timestamp}};
  if (c.found) out["exponents"] = c.exponents;
  return out;
}

nlohmann::json to_json(const AmplitudeCertificate& c) {
  return {{"method", c.method},
          {"amplitude_counts", c.counts},
          {"target_count", c.target_count},
          {"target_absent", c.target_absent},
          {"orbit_size", c.orbit_size}};
}

}  // namespace majorana
