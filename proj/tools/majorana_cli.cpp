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


// Command-line front end. Exit codes: 0 pass, 1 fail, 2 usage, 3 not found or
// partial result.

#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "majorana/braid_search.hpp"
#include "majorana/catalog.hpp"
#include "majorana/serialize.hpp"
#include "majorana/synthesis.hpp"

namespace {

using namespace majorana;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPartial = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int majorana_cap() {
  const char* env = std::getenv("MAJORANA_CAP");
  if (env == nullptr || *env == '\0') return kDefaultMajoranaCap;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw UsageError("MAJORANA_CAP must be an integer");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MajoranaError(ErrorKind::Parse, path + ": " + e.what());
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text << '\n';
}

/// Target from a matrix document file or a reference gate name.
Unitary load_target(const std::string& spec, const std::vector<double>& params) {
  if (std::filesystem::exists(spec)) return matrix_from_json(read_json_file(spec));
  return reference_gate(spec, params);
}

int logical_from_majoranas(int m) {
  if (m < 4 || m % 2 != 0) throw UsageError("need an even Majorana count >= 4");
  return m / 2 - 1;
}

json verify_line(const VerifyReport& r) {
  return {{"name", r.name},
          {"fidelity", r.fidelity},
          {"phase", complex_to_json(r.phase)},
          {"prefactor_exact", r.prefactor_exact},
          {"pass", r.pass}};
}

// ---- subcommands ----------------------------------------------------------

struct Options {
  double eps = 1e-9;

  std::string verify_name;
  std::vector<double> params;

  std::string synth_kind;
  int n = 1;
  int target_qubit = 1;
  std::vector<double> phases;
  std::vector<std::string> pi_phases;
  double phi = kPi;
  double beta = 0, gamma = 0, delta = 0;
  std::string out_path;
  bool check = false;

  std::string target;
  int logical = 0;
  int majoranas = 0;
  int depth = 8;
  std::vector<int> generators;
  std::size_t cap = kDefaultElementCap;
  bool exact = false;
  bool use_float = false;
  std::size_t state_index = 0;
  std::string state_file;
  bool list_states = false;

  std::string gate;
  std::string program_file;
  std::string basis = "logical";
};

int cmd_verify(const Options& o) {
  std::vector<const CatalogEntry*> entries;
  if (o.verify_name == "all") {
    for (const auto& e : catalog()) entries.push_back(&e);
  } else {
    entries.push_back(&catalog_entry(o.verify_name));
  }
  bool all_pass = true;
  for (const CatalogEntry* e : entries) {
    const VerifyReport r = verify_entry(*e, o.verify_name == "all" ? e->default_params : o.params, o.eps);
    all_pass = all_pass && r.pass;
    std::cout << verify_line(r).dump() << '\n';
  }
  return all_pass ? kExitPass : kExitFail;
}

std::vector<Angle> parse_pi_phases(const std::vector<std::string>& items) {
  std::vector<Angle> out;
  for (const auto& item : items) {
    const auto slash = item.find('/');
    try {
      if (slash == std::string::npos) {
        out.push_back(Angle::pi_times(std::stoll(item), 1));
      } else {
        out.push_back(Angle::pi_times(std::stoll(item.substr(0, slash)),
                                      std::stoll(item.substr(slash + 1))));
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad rational phase '" + item + "'");
    }
  }
  return out;
}

int cmd_synth(const Options& o) {
  MajoranaProgram program;
  int num_logical = 0;
  Unitary reference;
  const std::string& k = o.synth_kind;
  if (k == "diag") {
    DiagonalTarget t;
    if (!o.pi_phases.empty()) {
      t.phases = parse_pi_phases(o.pi_phases);
    } else {
      for (double p : o.phases) t.phases.push_back(Angle::radians(p));
    }
    const std::size_t size = t.phases.size();
    if (size < 2 || (size & (size - 1)) != 0) {
      throw UsageError("phase count must be a power of two >= 2");
    }
    t.num_logical = std::countr_zero(size);
    program = synth_diagonal(t);
    num_logical = t.num_logical;
    std::vector<Complex> diag;
    for (const auto& a : t.phases) diag.push_back(std::exp(Complex{0.0, a.value()}));
    reference = gates::diagonal(diag);
  } else if (k == "cnz" || k == "cnphase") {
    const double phi = k == "cnz" ? kPi : o.phi;
    program = k == "cnz" ? synth_cn_z(o.n) : synth_cn_phase(o.n, Angle::radians(phi));
    num_logical = o.n + 1;
    reference = gates::cn_phase(num_logical, phi);
  } else if (k == "cnnot") {
    program = synth_cn_not(o.n, o.target_qubit);
    num_logical = o.n + 1;
    reference = gates::cn_not(num_logical, o.target_qubit);
  } else if (k == "cnswap") {
    program = synth_cn_swap(o.n);
    num_logical = o.n + 2;
    reference = gates::cn_swap(num_logical);
  } else if (k == "cu") {
    program = synth_controlled_unitary(o.beta, o.gamma, o.delta);
    num_logical = 2;
    reference = gates::controlled_unitary(o.beta, o.gamma, o.delta);
  } else {
    throw UsageError("unknown synth kind '" + k + "'");
  }
  write_output(program_to_json(program, 2 * num_logical + 2).dump(2), o.out_path);
  if (!o.check) return kExitPass;
  const PhaseMatch m = equal_up_to_phase(realize_logical(num_logical, program), reference, o.eps);
  std::cout << json{{"fidelity", m.fidelity}, {"pass", m.equal}}.dump() << '\n';
  return m.equal ? kExitPass : kExitFail;
}

Encoding encoding_from(const Options& o) {
  if (o.logical > 0) return Encoding(o.logical);
  if (o.majoranas > 0) return Encoding(logical_from_majoranas(o.majoranas));
  throw UsageError("give --logical or --majoranas");
}

int cmd_search(const Options& o) {
  const Encoding enc = encoding_from(o);
  const Unitary target = load_target(o.target, o.params);
  const SearchResult r = search_word(enc, target, o.depth, o.generators, o.eps, o.cap);
  json out = to_json(r);
  out["target"] = o.target;
  out["num_logical"] = enc.num_logical();
  std::cout << out.dump() << '\n';
  return r.found ? kExitPass : kExitPartial;
}

int cmd_enumerate(const Options& o) {
  if (o.majoranas <= 0) throw UsageError("--majoranas is required");
  if (o.exact && o.use_float) throw UsageError("--exact and --float are exclusive");
  const FockSpace space = build_fock(o.majoranas, majorana_cap());
  const auto mode = o.use_float ? EnumerationMode::Float : EnumerationMode::Exact;
  const GroupEnumeration e = enumerate_group(space, o.generators, mode, o.cap);
  json out = to_json(e);
  out["num_majoranas"] = o.majoranas;
  out["mode"] = o.use_float ? "float" : "exact";
  std::cout << out.dump() << '\n';
  return e.completed ? kExitPass : kExitPartial;
}

int cmd_orbit(const Options& o) {
  const Encoding enc = encoding_from(o);
  StateVector initial = StateVector::Zero(enc.logical_dimension());
  if (!o.state_file.empty()) {
    const Unitary m = matrix_from_json(read_json_file(o.state_file));
    if (m.cols() != 1) throw UsageError("state document must have one column");
    initial = m.col(0);
  } else {
    if (o.state_index >= enc.logical_dimension()) throw UsageError("--state out of range");
    initial(o.state_index) = 1.0;
  }
  const OrbitResult orbit = orbit_states(enc, initial, o.generators, o.cap);
  std::set<int> counts;
  for (const auto& s : orbit.states) counts.insert(nonzero_amplitudes(s.state));
  json out = {{"count", orbit.states.size()},
              {"completed", orbit.completed},
              {"num_logical", enc.num_logical()},
              {"amplitude_counts", std::vector<int>(counts.begin(), counts.end())}};
  if (o.list_states) {
    json states = json::array();
    for (const auto& s : orbit.states) {
      json amps = json::array();
      for (Eigen::Index i = 0; i < s.state.size(); ++i) {
        amps.push_back({s.state(i).real(), s.state(i).imag()});
      }
      states.push_back({{"word", word_to_labels(s.word)}, {"amplitudes", amps}});
    }
    out["states"] = states;
  }
  std::cout << out.dump() << '\n';
  return orbit.completed ? kExitPass : kExitPartial;
}

int cmd_certify(const Options& o) {
  const Encoding enc = encoding_from(o);
  const Unitary target = load_target(o.target, o.params);
  std::vector<int> gens = o.generators;
  if (gens.empty()) {
    for (int a = 1; a < enc.num_majoranas(); a += 2) gens.push_back(a);
  }
  const DiagonalCertificate c = check_diagonal_impossibility(enc, target, gens, 4, o.target, o.eps);
  write_output(to_json(c).dump(2), o.out_path);
  return kExitPass;
}

int cmd_dump(const Options& o) {
  if (o.basis != "logical" && o.basis != "physical") throw UsageError("--basis is logical or physical");
  Unitary m;
  if (!o.program_file.empty()) {
    int num_majoranas = 0;
    const MajoranaProgram p = program_from_json(read_json_file(o.program_file), &num_majoranas);
    const FockSpace space = build_fock(num_majoranas, majorana_cap());
    m = run_program(space, p);
    if (o.basis == "logical") m = restrict_to_logical(Encoding(logical_from_majoranas(num_majoranas)), m);
  } else if (o.gate.empty()) {
    throw UsageError("give a gate name or --program");
  } else if (o.basis == "logical") {
    m = reference_gate(o.gate, o.params);
  } else {
    const CatalogEntry& e = catalog_entry(o.gate);
    const MajoranaProgram p = e.program(o.params.empty() ? e.default_params : o.params);
    m = run_program(build_fock(2 * e.num_logical + 2, majorana_cap()), p);
  }
  write_output(matrix_document(m, o.basis), o.out_path);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorana braiding gate toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--eps", o.eps, "Equality tolerance")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Verify catalog identities");
  verify->add_option("name", o.verify_name, "Entry name or 'all'")->required();
  verify->add_option("--params", o.params, "Gate parameters")->delimiter(',');

  app.add_subcommand("catalog", "Print the catalog as JSON");

  auto* synth = app.add_subcommand("synth", "Synthesize a program");
  synth->add_option("kind", o.synth_kind, "diag | cnz | cnphase | cnnot | cnswap | cu")->required();
  synth->add_option("--n", o.n, "Number of controls")->check(CLI::Range(1, 10));
  synth->add_option("--target", o.target_qubit, "CnNOT target qubit");
  synth->add_option("--phases", o.phases, "Diagonal phases in radians")->delimiter(',');
  synth->add_option("--pi-phases", o.pi_phases, "Diagonal phases as multiples of pi, e.g. 1/4")
      ->delimiter(',');
  synth->add_option("--phi", o.phi, "Phase for cnphase");
  synth->add_option("--beta", o.beta);
  synth->add_option("--gamma", o.gamma);
  synth->add_option("--delta", o.delta);
  synth->add_option("--out", o.out_path, "Write the program here");
  synth->add_flag("--check", o.check, "Simulate and compare with the reference gate");

  auto add_register = [&](CLI::App* sub) {
    auto* l = sub->add_option("--logical", o.logical, "Logical qubits")->check(CLI::Range(1, 11));
    auto* m = sub->add_option("--majoranas", o.majoranas, "Majorana count");
    l->excludes(m);
  };

  auto* search = app.add_subcommand("search", "Shortest braid word for a target");
  add_register(search);
  search->add_option("--target", o.target, "Gate name or matrix document")->required();
  search->add_option("--params", o.params)->delimiter(',');
  search->add_option("--depth", o.depth, "Maximum word length")->check(CLI::NonNegativeNumber);
  search->add_option("--generators", o.generators, "Braid indices")->delimiter(',');
  search->add_option("--cap", o.cap, "Element cap");

  auto* enumerate = app.add_subcommand("enumerate", "Order of the braid group image");
  enumerate->add_option("--majoranas", o.majoranas)->required();
  enumerate->add_flag("--exact", o.exact, "Exact ring arithmetic (default)");
  enumerate->add_flag("--float", o.use_float, "Floating keys on a 2^-20 grid");
  enumerate->add_option("--generators", o.generators)->delimiter(',');
  enumerate->add_option("--cap", o.cap, "Element cap");

  auto* orbit = app.add_subcommand("orbit", "States reachable by braiding");
  add_register(orbit);
  orbit->add_option("--state", o.state_index, "Initial computational basis index");
  orbit->add_option("--state-file", o.state_file, "Initial state as a one-column matrix document");
  orbit->add_option("--generators", o.generators)->delimiter(',');
  orbit->add_option("--cap", o.cap);
  orbit->add_flag("--list", o.list_states, "Print every state");

  auto* certify = app.add_subcommand("certify", "Exhaust products of commuting braids");
  add_register(certify);
  certify->add_option("--target", o.target)->required();
  certify->add_option("--params", o.params)->delimiter(',');
  certify->add_option("--generators", o.generators)->delimiter(',');
  certify->add_option("--out", o.out_path);

  auto* dump = app.add_subcommand("dump", "Print a matrix document");
  dump->add_option("gate", o.gate, "Reference gate name");
  dump->add_option("--program", o.program_file, "Program document");
  dump->add_option("--params", o.params)->delimiter(',');
  dump->add_option("--basis", o.basis, "logical | physical");
  dump->add_option("--out", o.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "verify") return cmd_verify(o);
    if (name == "catalog") {
      std::cout << catalog_json().dump(2) << '\n';
      return kExitPass;
    }
    if (name == "synth") return cmd_synth(o);
    if (name == "search") return cmd_search(o);
    if (name == "enumerate") return cmd_enumerate(o);
    if (name == "orbit") return cmd_orbit(o);
    if (name == "certify") return cmd_certify(o);
    if (name == "dump") return cmd_dump(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MajoranaError& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::UnknownGate:
      case ErrorKind::BadParams:
      case ErrorKind::Parse:
      case ErrorKind::IndexOutOfRange:
      case ErrorKind::DimensionMismatch:
      case ErrorKind::CapExceeded:
        return kExitUsage;
      default:
        return kExitFail;
    }
  }
  return kExitUsage;
}
