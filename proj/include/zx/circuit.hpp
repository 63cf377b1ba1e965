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

#ifndef ZXCHECK_CIRCUIT_HPP
#define ZXCHECK_CIRCUIT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "zx/cmatrix.hpp"
#include "zx/diagram.hpp"
#include "zx/semantics.hpp"

namespace zx {

struct SourceSpan {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
};

/** Lexical, syntactic or semantic fault in circuit text, with location. */
class ParseError : public ZXError {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : ZXError("line " + std::to_string(span.line) + ", column " +
                std::to_string(span.column) + ": " + message),
        span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

enum class GateKind { Rx, Ry, Rz, H, X, Z, Cnot };

struct Gate {
  GateKind kind;
  double theta = 0.0;    // rotations only
  unsigned target = 0;
  unsigned control = 0;  // CNOT only

  static Gate rx(double theta, unsigned target) {
    return {GateKind::Rx, theta, target, 0};
  }
  static Gate ry(double theta, unsigned target) {
    return {GateKind::Ry, theta, target, 0};
  }
  static Gate rz(double theta, unsigned target) {
    return {GateKind::Rz, theta, target, 0};
  }
  static Gate h(unsigned target) { return {GateKind::H, 0.0, target, 0}; }
  static Gate x(unsigned target) { return {GateKind::X, 0.0, target, 0}; }
  static Gate z(unsigned target) { return {GateKind::Z, 0.0, target, 0}; }
  static Gate cnot(unsigned control, unsigned target) {
    return {GateKind::Cnot, 0.0, target, control};
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/** Gate-list IR over a single quantum register. */
struct Circuit {
  unsigned qubits = 1;
  std::vector<Gate> gates;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/**
 * Parses a QASM 2.0 subset:
 *
 *   OPENQASM 2.0;            (optional)
 *   qreg <id>[<n>];          (exactly once, before any gate)
 *   rx(<expr>) <id>[<i>];    (likewise ry, rz)
 *   h <id>[<i>];  x ...;  z ...;
 *   cx <id>[<a>], <id>[<b>];
 *   // line comments
 *
 * <expr> is a constant arithmetic expression over numeric literals and
 * `pi` with + - * / and parentheses. Throws ParseError with a source
 * location for any fault, including out-of-range indices, a duplicate
 * qreg, an unknown register name and cx with equal operands.
 */
Circuit parse_qasm(std::string_view text);

/** Canonical text form; reparsing yields a structurally equal circuit. */
std::string print_qasm(const Circuit& c);

/**
 * The n-wire diagram cycling wire 0 to position n-1 (all other wires move
 * up one), built as a cascade of adjacent swaps.
 */
Diagram shift_top_to(unsigned n);

/** Inverse cascade: wire n-1 moves to the top. */
Diagram shift_to_top(unsigned n);

/**
 * The q-wire diagram exchanging wires i and j (i != j), built from the
 * shift constructions padded with plain wires.
 */
Diagram arbitrary_swap(unsigned q, unsigned i, unsigned j);

/**
 * Lowers one gate to a q-wire diagram. Single-qubit gates stack-pad the
 * 1-wire construction; a CNOT on non-adjacent qubits is conjugated with
 * an arbitrary swap that makes them adjacent.
 */
Diagram lower_gate(const Gate& g, unsigned q);

/** Left-to-right composition of lower_gate; no gates gives plain wires. */
Diagram lower_circuit(const Circuit& c);

/**
 * Independent reference unitary: single-qubit gates are Kronecker-embedded
 * at their index (qubit 0 most significant, matching Stack), CNOT is the
 * standard controlled-X permutation. Gates are applied in list order.
 */
CMatrix oracle_unitary(const Circuit& c,
                       unsigned max_qubits = kDefaultEvalLimit);

}  // namespace zx

#endif  // ZXCHECK_CIRCUIT_HPP
