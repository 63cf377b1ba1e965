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

#ifndef ZXCHECK_CMATRIX_HPP
#define ZXCHECK_CMATRIX_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "zx/diagram.hpp"

namespace zx {

using Complex = std::complex<double>;

/**
 * Dense complex matrix with row-major storage.
 *
 * This is the semantic domain for diagrams: a diagram with n inputs and m
 * outputs evaluates to a 2^m x 2^n matrix. Dense storage is deliberate;
 * the evaluator refuses diagrams beyond a small wire limit, so matrices
 * stay desk-scale.
 */
class CMatrix {
 public:
  /** Zero-filled rows x cols matrix. Both dimensions must be positive. */
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  CMatrix adjoint() const;

  CMatrix& operator*=(Complex s);
  friend CMatrix operator*(Complex s, CMatrix m) {
    m *= s;
    return m;
  }

  /** Largest entry magnitude; 0 for the all-zero matrix. */
  double max_abs() const;

  /** Rectangular grid of a+bi entries at fixed precision. */
  std::string to_pretty_string(int precision = 4) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

/** Standard matrix product. Throws ZXError unless a.cols == b.rows. */
CMatrix matmul(const CMatrix& a, const CMatrix& b);

/**
 * Kronecker product with a indexing the coarse blocks, so the top diagram
 * of a Stack is the left factor.
 */
CMatrix kron(const CMatrix& a, const CMatrix& b);

/** n-fold Kronecker power of the Hadamard matrix; n = 0 gives [[1]]. */
CMatrix hadamard_pow(unsigned n);

/**
 * Entrywise comparison: |a_ij - b_ij| <= tol * (1 + max(|a_ij|, |b_ij|)).
 * Throws ZXError on dimension mismatch.
 */
bool approx_eq(const CMatrix& a, const CMatrix& b, double tol);

}  // namespace zx

#endif  // ZXCHECK_CMATRIX_HPP
