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

#ifndef ZXCHECK_SEMANTICS_HPP
#define ZXCHECK_SEMANTICS_HPP

#include "zx/cmatrix.hpp"
#include "zx/diagram.hpp"

namespace zx {

/** Default cap on boundary wires during evaluation (2^12-dim matrices). */
inline constexpr unsigned kDefaultEvalLimit = 12;

/** Raised when a (sub)diagram's boundary exceeds the evaluation limit. */
class EvalLimitError : public ZXError {
 public:
  using ZXError::ZXError;
};

/**
 * The 2^n_out x 2^n_in Z-spider matrix: all zeros except entry (0,0) = 1
 * and entry (2^n_out - 1, 2^n_in - 1) = e^{i alpha}. For the degenerate
 * 0-in/0-out spider both corners land on (0,0) and the result is the
 * 1x1 matrix [1 + e^{i alpha}].
 */
CMatrix z_spider_semantics(unsigned n_in, unsigned n_out, double alpha);

/** H^{(x) n_out} . Z-spider . H^{(x) n_in}. */
CMatrix x_spider_semantics(unsigned n_in, unsigned n_out, double alpha);

/**
 * Spider matrix built independently as a sum of two outer products of
 * computational (Z) or plus/minus (X) basis tensor powers. Kept as a
 * cross-check for the matrix-form spider semantics; tests assert the two
 * constructions agree.
 */
CMatrix braket_spider_oracle(SpiderColor color, unsigned n_in, unsigned n_out,
                             double alpha);

/**
 * Evaluates a diagram to its linear map, dimensions 2^n_out x 2^n_in.
 *
 * Stack maps to kron(top, bottom) and Compose(a, b) to matmul(sem(b),
 * sem(a)). Throws EvalLimitError if any sub-diagram's n_in or n_out
 * exceeds max_wires.
 */
CMatrix semantics(const Diagram& d, unsigned max_wires = kDefaultEvalLimit);

}  // namespace zx

#endif  // ZXCHECK_SEMANTICS_HPP
