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

#include "zx/propcheck.hpp"

#include <cmath>
#include <cstdio>

namespace zx {

namespace {

std::string complex_repr(Complex z) {
  char buf[64];
  double im = z.imag() == 0.0 ? 0.0 : z.imag();  // normalize -0
  std::snprintf(buf, sizeof(buf), "%g%c%gi", z.real(), im < 0 ? '-' : '+',
                std::fabs(im));
  return buf;
}

/** Row-major index of the first maximum-magnitude entry. */
std::pair<std::size_t, std::size_t> argmax_abs(const CMatrix& m) {
  std::size_t br = 0, bc = 0;
  double best = -1.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (std::abs(m(r, c)) > best) {
        best = std::abs(m(r, c));
        br = r;
        bc = c;
      }
  return {br, bc};
}

}  // namespace

bool is_proportional(const PropResult& r) {
  return std::holds_alternative<Proportional>(r);
}

std::string to_line(const PropResult& r) {
  if (const auto* p = std::get_if<Proportional>(&r))
    return "PROPORTIONAL c=" + complex_repr(p->scalar);
  if (const auto* n = std::get_if<NotProportional>(&r)) {
    return "MISMATCH at (" + std::to_string(n->row) + "," +
           std::to_string(n->col) + "): expected " +
           complex_repr(n->expected) + ", actual " + complex_repr(n->actual);
  }
  return "DIMENSION MISMATCH";
}

PropResult proportional(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return DimensionMismatch{};

  auto [r, c] = argmax_abs(b);
  if (std::abs(b(r, c)) <= tol) {
    // b is numerically zero; proportional iff a is zero too.
    auto [ar, ac] = argmax_abs(a);
    if (std::abs(a(ar, ac)) <= tol) return Proportional{Complex{1.0, 0.0}};
    return NotProportional{ar, ac, Complex{0.0, 0.0}, a(ar, ac)};
  }

  Complex scalar = a(r, c) / b(r, c);
  if (std::abs(scalar) <= tol) {
    // Any non-zero witness would make a non-zero at b's largest entry.
    return NotProportional{r, c, b(r, c), a(r, c)};
  }

  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Complex want = scalar * b(i, j);
      if (std::abs(a(i, j) - want) > tol * (1.0 + std::abs(want)))
        return NotProportional{i, j, want, a(i, j)};
    }
  return Proportional{scalar};
}

PropResult diagrams_proportional(const Diagram& d1, const Diagram& d2,
                                 double tol, unsigned max_wires) {
  if (d1.n_in() != d2.n_in() || d1.n_out() != d2.n_out())
    return DimensionMismatch{};
  return proportional(semantics(d1, max_wires), semantics(d2, max_wires), tol);
}

}  // namespace zx
