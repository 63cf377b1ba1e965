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

#ifndef ZXCHECK_PROPCHECK_HPP
#define ZXCHECK_PROPCHECK_HPP

#include <complex>
#include <string>
#include <variant>

#include "zx/cmatrix.hpp"
#include "zx/diagram.hpp"
#include "zx/semantics.hpp"

namespace zx {

inline constexpr double kDefaultPropTol = 1e-9;

/** Witness for equality up to a non-zero complex scalar: a = scalar * b. */
struct Proportional {
  Complex scalar;
};

/** A concrete violating entry: a(row, col) differs from scalar * b(row, col). */
struct NotProportional {
  std::size_t row;
  std::size_t col;
  Complex expected;
  Complex actual;
};

struct DimensionMismatch {};

using PropResult = std::variant<Proportional, NotProportional, DimensionMismatch>;

bool is_proportional(const PropResult& r);

/**
 * One-line report: "PROPORTIONAL c=<re>+<im>i", "MISMATCH at (r,c): ..." or
 * "DIMENSION MISMATCH".
 */
std::string to_line(const PropResult& r);

/**
 * Decides whether a = c * b for some non-zero complex c.
 *
 * The candidate scalar is estimated at the maximum-magnitude entry of b and
 * then verified entrywise at |a_ij - c*b_ij| <= tol * (1 + |c*b_ij|). Two
 * all-zero matrices are proportional with witness 1; an all-zero matrix is
 * not proportional to a non-zero one.
 */
PropResult proportional(const CMatrix& a, const CMatrix& b,
                        double tol = kDefaultPropTol);

/**
 * Proportionality of the two diagrams' semantics. Boundary sizes must
 * match, otherwise DimensionMismatch. Propagates EvalLimitError.
 */
PropResult diagrams_proportional(const Diagram& d1, const Diagram& d2,
                                 double tol = kDefaultPropTol,
                                 unsigned max_wires = kDefaultEvalLimit);

}  // namespace zx

#endif  // ZXCHECK_PROPCHECK_HPP
