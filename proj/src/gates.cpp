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

#include "zx/gates.hpp"

#include <cmath>
#include <numbers>

namespace zx {

namespace {
constexpr double kPi = std::numbers::pi;
}

Diagram zx_rz(double alpha) { return Diagram::z_spider(1, 1, alpha); }

Diagram zx_rx(double alpha) { return Diagram::x_spider(1, 1, alpha); }

Diagram zx_hadamard() {
  return compose(zx_rz(kPi / 2), compose(zx_rx(kPi / 2), zx_rz(kPi / 2)));
}

Diagram zx_ry(double alpha) {
  return compose(zx_rx(kPi / 2), compose(zx_rz(alpha), zx_rx(-kPi / 2)));
}

Diagram zx_y() { return compose(zx_rx(kPi), zx_rz(kPi)); }

Diagram zx_cnot_adjacent() {
  return compose(stack(Diagram::z_spider(1, 2, 0.0), wire()),
                 stack(wire(), Diagram::x_spider(2, 1, 0.0)));
}

Diagram zx_cnot_adjacent_reversed() { return color_swap(zx_cnot_adjacent()); }

Diagram swap_via_3_cnots() {
  Diagram hh = stack(zx_hadamard(), zx_hadamard());
  Diagram reversed = compose(hh, compose(zx_cnot_adjacent(), hh));
  return compose(zx_cnot_adjacent(), compose(reversed, zx_cnot_adjacent()));
}

CMatrix oracle_rx(double alpha) {
  double c = std::cos(alpha / 2), s = std::sin(alpha / 2);
  return CMatrix(2, 2, {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}});
}

CMatrix oracle_ry(double alpha) {
  double c = std::cos(alpha / 2), s = std::sin(alpha / 2);
  return CMatrix(2, 2, {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}});
}

CMatrix oracle_rz(double alpha) {
  return CMatrix(2, 2, {std::polar(1.0, -alpha / 2), Complex{0, 0},
                        Complex{0, 0}, std::polar(1.0, alpha / 2)});
}

CMatrix oracle_h() { return hadamard_pow(1); }

CMatrix oracle_x() { return CMatrix(2, 2, {0, 1, 1, 0}); }

CMatrix oracle_y() {
  return CMatrix(2, 2, {Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}});
}

CMatrix oracle_z() { return CMatrix(2, 2, {1, 0, 0, -1}); }

CMatrix oracle_cnot() {
  return CMatrix(4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
}

CMatrix oracle_cnot_reversed() {
  return CMatrix(4, 4, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0});
}

CMatrix oracle_swap() {
  return CMatrix(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
}

const std::vector<GateUnitaryOracle>& gate_unitary_oracles() {
  static const std::vector<GateUnitaryOracle> oracles = {
      {"rx", 1, [](std::span<const double> p) { return oracle_rx(p[0]); }},
      {"ry", 1, [](std::span<const double> p) { return oracle_ry(p[0]); }},
      {"rz", 1, [](std::span<const double> p) { return oracle_rz(p[0]); }},
      {"h", 0, [](std::span<const double>) { return oracle_h(); }},
      {"x", 0, [](std::span<const double>) { return oracle_x(); }},
      {"y", 0, [](std::span<const double>) { return oracle_y(); }},
      {"z", 0, [](std::span<const double>) { return oracle_z(); }},
      {"cnot", 0, [](std::span<const double>) { return oracle_cnot(); }},
      {"cnot_reversed", 0,
       [](std::span<const double>) { return oracle_cnot_reversed(); }},
      {"swap", 0, [](std::span<const double>) { return oracle_swap(); }},
  };
  return oracles;
}

}  // namespace zx
