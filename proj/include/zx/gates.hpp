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

#ifndef ZXCHECK_GATES_HPP
#define ZXCHECK_GATES_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zx/cmatrix.hpp"
#include "zx/diagram.hpp"

namespace zx {

// Spider encodings of the common gates. Each is proportional (not equal)
// to its unitary; the scalar is some power of sqrt(2) times a phase.

Diagram zx_rz(double alpha);
Diagram zx_rx(double alpha);

/** Euler form Rz(pi/2) ; Rx(pi/2) ; Rz(pi/2), proportional to H. */
Diagram zx_hadamard();

/** Rx(pi/2) ; Rz(alpha) ; Rx(-pi/2), proportional to Ry(alpha). */
Diagram zx_ry(double alpha);

/** Rx(pi) ; Rz(pi), proportional to Pauli Y. */
Diagram zx_y();

/**
 * CNOT on two adjacent wires, control on top: a Z spider splitting the
 * control wire feeding an X spider on the target wire.
 */
Diagram zx_cnot_adjacent();

/** The color-swapped adjacent CNOT: control on the bottom wire. */
Diagram zx_cnot_adjacent_reversed();

/**
 * Two-wire swap as CNOT ; reversed-CNOT ; CNOT, with the middle CNOT
 * reversed by Hadamard conjugation on both wires. Proportional to Swap.
 */
Diagram swap_via_3_cnots();

// Textbook unitaries, used as validation oracles for the constructions
// above and for circuit ingestion.

CMatrix oracle_rx(double alpha);
CMatrix oracle_ry(double alpha);
CMatrix oracle_rz(double alpha);
CMatrix oracle_h();
CMatrix oracle_x();
CMatrix oracle_y();
CMatrix oracle_z();
CMatrix oracle_cnot();
CMatrix oracle_cnot_reversed();
CMatrix oracle_swap();

/** A named unitary builder over 0 or more angle parameters. */
struct GateUnitaryOracle {
  std::string name;
  unsigned n_params;
  std::function<CMatrix(std::span<const double>)> build;
};

/** Catalog of all gate oracles, one entry per gate construction. */
const std::vector<GateUnitaryOracle>& gate_unitary_oracles();

}  // namespace zx

#endif  // ZXCHECK_GATES_HPP
