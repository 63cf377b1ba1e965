// Copyright 2026 The zxcheck developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zx/circuit.hpp"
#include "zx/graphrep.hpp"
#include "zx/propcheck.hpp"
#include "zx/rules.hpp"
#include "zx/semantics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotEquivalent = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw zx::ZXError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

zx::Circuit load_circuit(const std::string& path) {
  try {
    return zx::parse_qasm(read_file(path));
  } catch (const zx::ParseError& e) {
    throw zx::ZXError(path + ": " + e.what());
  }
}

int run_sim(const std::string& file, unsigned max_qubits) {
  zx::Circuit c = load_circuit(file);
  if (c.qubits > max_qubits) {
    throw zx::ZXError("circuit has " + std::to_string(c.qubits) +
                      " qubits, exceeds --max-qubits " +
                      std::to_string(max_qubits));
  }
  zx::CMatrix m = zx::semantics(zx::lower_circuit(c), max_qubits);
  std::cout << m.to_pretty_string();
  return kExitOk;
}

int run_validate(const std::string& file1, const std::string& file2,
                 double tol, unsigned max_qubits) {
  zx::Circuit c1 = load_circuit(file1);
  zx::Circuit c2 = load_circuit(file2);
  if (c1.qubits > max_qubits || c2.qubits > max_qubits) {
    throw zx::ZXError("circuit exceeds --max-qubits " +
                      std::to_string(max_qubits));
  }
  zx::PropResult r = zx::diagrams_proportional(
      zx::lower_circuit(c1), zx::lower_circuit(c2), tol, max_qubits);
  std::cout << zx::to_line(r) << "\n";
  return zx::is_proportional(r) ? kExitOk : kExitNotEquivalent;
}

int run_lower(const std::string& file) {
  zx::Circuit c = load_circuit(file);
  std::cout << zx::to_sexpr(zx::lower_circuit(c)) << "\n";
  return kExitOk;
}

int run_to_graph(const std::string& file, const std::string& format,
                 bool restricted) {
  zx::Circuit c = load_circuit(file);
  zx::Diagram d = zx::lower_circuit(c);
  zx::ZxGraph g =
      restricted ? zx::to_restricted_graph(d) : zx::annotate_with_swaps(d);
  zx::ExportFormat f =
      format == "dot" ? zx::ExportFormat::Dot : zx::ExportFormat::Json;
  std::cout << zx::export_graph(g, f);
  if (f == zx::ExportFormat::Json) std::cout << "\n";
  return kExitOk;
}

int run_check_rules(std::uint64_t seed, std::size_t samples, double tol,
                    const std::string& only_rule) {
  std::vector<zx::RewriteRule> rules = zx::rule_catalog();
  if (!only_rule.empty()) {
    std::vector<zx::RewriteRule> filtered;
    for (const zx::RewriteRule& r : rules)
      if (r.name == only_rule) filtered.push_back(r);
    if (filtered.empty())
      throw zx::ZXError("unknown rule '" + only_rule + "'");
    rules = std::move(filtered);
  }
  bool all_passed = true;
  for (const zx::RewriteRule& rule : rules) {
    zx::RuleReport report = zx::check_rule(rule, samples, tol, seed);
    if (report.passed) {
      std::cout << "PASS " << report.rule << " (" << report.samples_run
                << " samples)\n";
    } else {
      std::cout << "FAIL " << report.rule
                << " params=" << report.counterexample << " "
                << report.detail << "\n";
      all_passed = false;
    }
  }
  return all_passed ? kExitOk : kExitNotEquivalent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ZX-calculus translation validator for quantum circuits"};
  app.require_subcommand(1);

  double tol = 1e-9;
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  unsigned max_qubits = 12;
  std::string format = "json";
  std::string only_rule;
  bool restricted = false;
  std::string file1, file2;

  CLI::App* sim = app.add_subcommand(
      "sim", "Print the semantics matrix of a lowered circuit");
  sim->add_option("file", file1, "circuit file (.qasm)")->required();
  sim->add_option("--max-qubits", max_qubits, "evaluation size cap")
      ->check(CLI::Range(1u, 14u));

  CLI::App* validate = app.add_subcommand(
      "validate", "Check two circuits equal up to a non-zero scalar");
  validate->add_option("file1", file1, "first circuit")->required();
  validate->add_option("file2", file2, "second circuit")->required();
  validate->add_option("--tol", tol, "numeric tolerance")
      ->check(CLI::PositiveNumber);
  validate->add_option("--max-qubits", max_qubits, "evaluation size cap")
      ->check(CLI::Range(1u, 14u));

  CLI::App* lower = app.add_subcommand(
      "lower", "Print the canonical diagram text of a lowered circuit");
  lower->add_option("file", file1, "circuit file (.qasm)")->required();

  CLI::App* tograph = app.add_subcommand(
      "to-graph", "Convert a lowered circuit to the graph representation");
  tograph->add_option("file", file1, "circuit file (.qasm)")->required();
  tograph->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "dot"}));
  tograph->add_flag("--restricted", restricted,
                    "normalize to the restricted form first");

  CLI::App* rules = app.add_subcommand(
      "check-rules", "Numerically certify the rewrite-rule catalog");
  rules->add_option("--seed", seed, "sampling seed");
  rules->add_option("--samples", samples, "samples per rule")
      ->check(CLI::PositiveNumber);
  rules->add_option("--tol", tol, "numeric tolerance")
      ->check(CLI::PositiveNumber);
  rules->add_option("--rule", only_rule, "check a single rule by name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  try {
    if (sim->parsed()) return run_sim(file1, max_qubits);
    if (validate->parsed())
      return run_validate(file1, file2, tol, max_qubits);
    if (lower->parsed()) return run_lower(file1);
    if (tograph->parsed()) return run_to_graph(file1, format, restricted);
    if (rules->parsed())
      return run_check_rules(seed, samples, tol, only_rule);
  } catch (const zx::ZXError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
