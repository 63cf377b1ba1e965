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

#include <doctest.h>

#include <numbers>

#include "testutil.hpp"
#include "zx/rules.hpp"
#include "zx/semantics.hpp"

using namespace zx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("z spider matrices") {
  CHECK(approx_eq(z_spider_semantics(1, 1, 0.0), CMatrix::identity(2),
                  1e-12));

  CMatrix cap_like = z_spider_semantics(0, 2, 0.0);
  CHECK(approx_eq(cap_like, CMatrix(4, 1, {1, 0, 0, 1}), 1e-12));
  CHECK(approx_eq(cap_like, semantics(Diagram::cap()), 1e-12));

  CMatrix degenerate = z_spider_semantics(0, 0, 0.0);
  CHECK(degenerate.rows() == 1);
  CHECK(degenerate(0, 0) == Complex{2.0, 0.0});
  CHECK(approx_eq(degenerate, braket_spider_oracle(SpiderColor::Z, 0, 0, 0.0),
                  1e-12));
}

TEST_CASE("x spider matrices") {
  CHECK(approx_eq(x_spider_semantics(1, 1, kPi),
                  CMatrix(2, 2, {0, 1, 1, 0}), 1e-12));
  CHECK(approx_eq(x_spider_semantics(1, 1, 0.0), CMatrix::identity(2),
                  1e-12));

  // 2-in/1-out phase-0 X spider: the XOR map, up to 1/sqrt(2).
  double s = 1.0 / std::sqrt(2.0);
  CMatrix xor_map(2, 4, {s, 0, 0, s, 0, s, s, 0});
  CHECK(approx_eq(x_spider_semantics(2, 1, 0.0), xor_map, 1e-12));
  CHECK(approx_eq(x_spider_semantics(2, 1, 0.0),
                  braket_spider_oracle(SpiderColor::X, 2, 1, 0.0), 1e-12));
}

TEST_CASE("structural evaluation") {
  CHECK(approx_eq(semantics(Diagram::empty()), CMatrix::identity(1), 1e-12));
  CHECK(approx_eq(semantics(compose(Diagram::cap(), Diagram::cup())),
                  Complex{2.0, 0.0} * CMatrix::identity(1), 1e-12));
  CHECK(approx_eq(semantics(stack(wire(), wire())), CMatrix::identity(4),
                  1e-12));
  CHECK(approx_eq(semantics(n_wire(3)), CMatrix::identity(8), 1e-12));
  CHECK(approx_eq(semantics(Diagram::cup()), CMatrix(1, 4, {1, 0, 0, 1}),
                  1e-12));
  CMatrix swap_m(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
  CHECK(approx_eq(semantics(Diagram::swap_wires()), swap_m, 1e-12));
}

TEST_CASE("bra-ket oracle agrees with the matrix form") {
  CHECK(approx_eq(braket_spider_oracle(SpiderColor::Z, 1, 1, 0.0),
                  CMatrix::identity(2), 1e-12));
  CHECK(test::max_entry_distance(
            braket_spider_oracle(SpiderColor::Z, 2, 1, kPi / 2),
            z_spider_semantics(2, 1, kPi / 2)) < 1e-12);
  CHECK(test::max_entry_distance(
            braket_spider_oracle(SpiderColor::X, 1, 2, 0.0),
            x_spider_semantics(1, 2, 0.0)) < 1e-12);

  Rng rng(31);
  for (unsigned in = 0; in <= 3; ++in)
    for (unsigned out = 0; out <= 3; ++out)
      for (double alpha : {0.0, kPi / 4, kPi / 2, kPi, rng.angle()}) {
        CHECK(test::max_entry_distance(
                  braket_spider_oracle(SpiderColor::Z, in, out, alpha),
                  z_spider_semantics(in, out, alpha)) < 1e-10);
        CHECK(test::max_entry_distance(
                  braket_spider_oracle(SpiderColor::X, in, out, alpha),
                  x_spider_semantics(in, out, alpha)) < 1e-10);
      }
}

TEST_CASE("dimension law on random diagrams") {
  Rng rng(13);
  for (int k = 0; k < 40; ++k) {
    unsigned i = rng.range(0, 4), o = rng.range(0, 4);
    Diagram d = random_diagram(rng, i, o);
    CMatrix m = semantics(d);
    CHECK(m.rows() == (std::size_t{1} << d.n_out()));
    CHECK(m.cols() == (std::size_t{1} << d.n_in()));
  }
}

TEST_CASE("composition is associative semantically") {
  Rng rng(17);
  for (int k = 0; k < 25; ++k) {
    unsigned i = rng.range(0, 3), m1 = rng.range(0, 3), m2 = rng.range(0, 3),
             o = rng.range(0, 3);
    Diagram a = random_diagram(rng, i, m1);
    Diagram b = random_diagram(rng, m1, m2);
    Diagram c = random_diagram(rng, m2, o);
    CMatrix left = semantics(compose(compose(a, b), c));
    CMatrix right = semantics(compose(a, compose(b, c)));
    CHECK(approx_eq(left, right, 1e-9));
  }
}

TEST_CASE("evaluation refuses oversized diagrams") {
  CHECK_THROWS_AS(semantics(Diagram::z_spider(13, 1, 0.0)), EvalLimitError);
  // The cap applies to every sub-diagram, not just the root boundary.
  Diagram bulge =
      compose(Diagram::z_spider(1, 13, 0.0), Diagram::z_spider(13, 1, 0.0));
  CHECK(bulge.n_in() == 1);
  CHECK(bulge.n_out() == 1);
  CHECK_THROWS_AS(semantics(bulge), EvalLimitError);
  CHECK_NOTHROW(semantics(bulge, 13));
}
