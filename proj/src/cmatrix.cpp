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

#include "zx/cmatrix.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace zx {

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
  if (rows == 0 || cols == 0) throw ZXError("CMatrix: dimensions must be positive");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols,
                 std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw ZXError("CMatrix: dimensions must be positive");
  if (entries_.size() != rows * cols)
    throw ZXError("CMatrix: entry count does not match dimensions");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (Complex& e : entries_) e *= s;
  return *this;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

std::string CMatrix::to_pretty_string(int precision) const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Complex& e = (*this)(r, c);
      if (c) os << "  ";
      os << std::setw(precision + 4) << e.real()
         << (e.imag() < 0 ? '-' : '+') << std::fabs(e.imag()) << 'i';
    }
    os << '\n';
  }
  return os.str();
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ZXError("matmul: inner dimensions differ (" +
                  std::to_string(a.cols()) + " vs " +
                  std::to_string(b.rows()) + ")");
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      Complex v = a(ar, ac);
      if (v == Complex{0.0, 0.0}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
    }
  return out;
}

CMatrix hadamard_pow(unsigned n) {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix h(2, 2, {s, s, s, -s});
  CMatrix out = CMatrix::identity(1);
  for (unsigned k = 0; k < n; ++k) out = kron(out, h);
  return out;
}

bool approx_eq(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ZXError("approx_eq: dimension mismatch");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      double mag = std::max(std::abs(a(r, c)), std::abs(b(r, c)));
      if (std::abs(a(r, c) - b(r, c)) > tol * (1.0 + mag)) return false;
    }
  return true;
}

}  // namespace zx
