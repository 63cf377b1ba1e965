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

#include "zx/semantics.hpp"

#include <cmath>
#include <complex>

namespace zx {

namespace {

std::size_t pow2(unsigned n) { return std::size_t{1} << n; }

CMatrix tensor_power(const CMatrix& v, unsigned n) {
  CMatrix out = CMatrix::identity(1);
  for (unsigned k = 0; k < n; ++k) out = kron(out, v);
  return out;
}

}  // namespace

CMatrix z_spider_semantics(unsigned n_in, unsigned n_out, double alpha) {
  CMatrix m(pow2(n_out), pow2(n_in));
  m(0, 0) = 1.0;
  m(pow2(n_out) - 1, pow2(n_in) - 1) += std::polar(1.0, alpha);
  return m;
}

CMatrix x_spider_semantics(unsigned n_in, unsigned n_out, double alpha) {
  return matmul(hadamard_pow(n_out),
                matmul(z_spider_semantics(n_in, n_out, alpha),
                       hadamard_pow(n_in)));
}

CMatrix braket_spider_oracle(SpiderColor color, unsigned n_in, unsigned n_out,
                             double alpha) {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix k0(2, 1), k1(2, 1);
  if (color == SpiderColor::Z) {
    k0(0, 0) = 1.0;
    k1(1, 0) = 1.0;
  } else {
    k0(0, 0) = s;
    k0(1, 0) = s;
    k1(0, 0) = s;
    k1(1, 0) = -s;
  }
  CMatrix first = matmul(tensor_power(k0, n_out),
                         tensor_power(k0, n_in).adjoint());
  CMatrix second = matmul(tensor_power(k1, n_out),
                          tensor_power(k1, n_in).adjoint());
  second *= std::polar(1.0, alpha);
  CMatrix out(first.rows(), first.cols());
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c)
      out(r, c) = first(r, c) + second(r, c);
  return out;
}

CMatrix semantics(const Diagram& d, unsigned max_wires) {
  if (d.n_in() > max_wires || d.n_out() > max_wires) {
    throw EvalLimitError(
        "semantics: diagram boundary of " +
        std::to_string(std::max(d.n_in(), d.n_out())) +
        " wires exceeds the evaluation limit of " + std::to_string(max_wires));
  }
  switch (d.kind()) {
    case DiagramKind::Empty:
      return CMatrix::identity(1);
    case DiagramKind::Cap:
      return CMatrix(4, 1, {1.0, 0.0, 0.0, 1.0});
    case DiagramKind::Cup:
      return CMatrix(1, 4, {1.0, 0.0, 0.0, 1.0});
    case DiagramKind::Swap:
      return CMatrix(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    case DiagramKind::ZSpider:
      return z_spider_semantics(d.n_in(), d.n_out(), d.phase());
    case DiagramKind::XSpider:
      return x_spider_semantics(d.n_in(), d.n_out(), d.phase());
    case DiagramKind::Stack:
      return kron(semantics(d.first(), max_wires),
                  semantics(d.second(), max_wires));
    case DiagramKind::Compose:
      return matmul(semantics(d.second(), max_wires),
                    semantics(d.first(), max_wires));
  }
  throw ZXError("semantics: unknown diagram kind");
}

}  // namespace zx
