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

#ifndef ZXCHECK_TESTS_TESTUTIL_HPP
#define ZXCHECK_TESTS_TESTUTIL_HPP

#include <string>
#include <vector>

#include "zx/circuit.hpp"
#include "zx/cmatrix.hpp"
#include "zx/rng.hpp"

namespace zx::test {

/** Random circuit over {rx, ry, rz, h, x, z, cx}, uniform targets. */
Circuit random_circuit(Rng& rng, unsigned max_qubits, unsigned max_gates);

/** Matrix with entries uniform in the complex unit square, shifted. */
CMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

/**
 * 2^q-dimensional permutation matrix for a wire relabeling: output wire j
 * carries input wire source[j]; wire 0 is the most significant bit.
 */
CMatrix wire_permutation_matrix(unsigned q,
                                const std::vector<unsigned>& source);

/** Largest |a_ij - b_ij|; requires equal dimensions. */
double max_entry_distance(const CMatrix& a, const CMatrix& b);

/**
 * Validates text against a small undirected-DOT grammar:
 *   graph ID { (ID attrs? ';' | ID -- ID attrs? ';')* }
 * with attrs of the form [k=v, ...] and quoted or bare values.
 */
bool dot_well_formed(const std::string& text);

}  // namespace zx::test

#endif  // ZXCHECK_TESTS_TESTUTIL_HPP
