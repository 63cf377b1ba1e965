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

#include "zx/diagram.hpp"
#include "zx/rules.hpp"

using namespace zx;

namespace {
constexpr double kPi = std::numbers::pi;

// Recomputes boundary sizes bottom-up, ignoring the cached values.
std::pair<unsigned, unsigned> recompute_dims(const Diagram& d) {
  switch (d.kind()) {
    case DiagramKind::Empty: return {0, 0};
    case DiagramKind::Cap: return {0, 2};
    case DiagramKind::Cup: return {2, 0};
    case DiagramKind::Swap: return {2, 2};
    case DiagramKind::ZSpider:
    case DiagramKind::XSpider:
      return {d.n_in(), d.n_out()};
    case DiagramKind::Compose: {
      auto a = recompute_dims(d.first());
      auto b = recompute_dims(d.second());
      return {a.first, b.second};
    }
    case DiagramKind::Stack: {
      auto a = recompute_dims(d.first());
      auto b = recompute_dims(d.second());
      return {a.first + b.first, a.second + b.second};
    }
  }
  return {0, 0};
}
}  // namespace

TEST_CASE("compose checks boundary sizes") {
  Diagram d = compose(Diagram::z_spider(1, 2, 0.0), Diagram::cup());
  CHECK(d.n_in() == 1);
  CHECK(d.n_out() == 0);

  Diagram e = compose(Diagram::empty(), Diagram::empty());
  CHECK(e.n_in() == 0);
  CHECK(e.n_out() == 0);

  CHECK_THROWS_WITH_AS(compose(Diagram::cap(), Diagram::z_spider(1, 1, 0.0)),
                       doctest::Contains("2"), ZXError);
}

TEST_CASE("stack adds boundary sizes") {
  CHECK(stack(Diagram::swap_wires(), Diagram::swap_wires()).n_in() == 4);
  CHECK(stack(Diagram::swap_wires(), Diagram::swap_wires()).n_out() == 4);
  Diagram s = stack(Diagram::empty(), Diagram::cap());
  CHECK(s.n_in() == 0);
  CHECK(s.n_out() == 2);
  Diagram t = stack(Diagram::z_spider(2, 1, kPi), Diagram::cup());
  CHECK(t.n_in() == 4);
  CHECK(t.n_out() == 1);
}

TEST_CASE("wire and n_wire") {
  CHECK(structurally_equal(n_wire(0), Diagram::empty()));
  CHECK(structurally_equal(wire(), Diagram::z_spider(1, 1, 0.0)));
  CHECK(structurally_equal(n_wire(2), stack(wire(), wire())));
  CHECK(n_wire(5).n_in() == 5);
  CHECK(n_wire(5).n_out() == 5);
}

TEST_CASE("color_swap on leaves") {
  Diagram z = Diagram::z_spider(1, 2, kPi / 4);
  Diagram x = color_swap(z);
  CHECK(x.kind() == DiagramKind::XSpider);
  CHECK(x.n_in() == 1);
  CHECK(x.n_out() == 2);
  CHECK(x.phase() == doctest::Approx(kPi / 4));
  CHECK(structurally_equal(color_swap(Diagram::swap_wires()),
                           Diagram::swap_wires()));
  CHECK(structurally_equal(color_swap(Diagram::cap()), Diagram::cap()));
}

TEST_CASE("color_swap is an involution preserving dims") {
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    unsigned i = rng.range(0, 3), o = rng.range(0, 3);
    Diagram d = random_diagram(rng, i, o);
    Diagram swapped = color_swap(d);
    CHECK(swapped.n_in() == d.n_in());
    CHECK(swapped.n_out() == d.n_out());
    CHECK(structurally_equal(color_swap(swapped), d));
  }
}

TEST_CASE("phases normalize into [0, 2pi)") {
  Diagram a = Diagram::z_spider(1, 1, kPi / 3);
  Diagram b = Diagram::z_spider(1, 1, kPi / 3 + 2 * kPi);
  Diagram c = Diagram::z_spider(1, 1, kPi / 3 - 2 * kPi);
  CHECK(structurally_equal(a, b));
  CHECK(structurally_equal(a, c));
  CHECK(b.phase() >= 0.0);
  CHECK(b.phase() < 2 * kPi);
  CHECK(Diagram::x_spider(2, 0, -kPi / 2).phase() ==
        doctest::Approx(3 * kPi / 2));
}

TEST_CASE("typing soundness on random diagrams") {
  Rng rng(11);
  for (int k = 0; k < 80; ++k) {
    unsigned i = rng.range(0, 4), o = rng.range(0, 4);
    Diagram d = random_diagram(rng, i, o);
    CHECK(d.n_in() == i);
    CHECK(d.n_out() == o);
    auto dims = recompute_dims(d);
    CHECK(dims.first == d.n_in());
    CHECK(dims.second == d.n_out());
  }
}

TEST_CASE("sexpr printing uses the canonical forms") {
  CHECK(to_sexpr(wire()) == "(wire)");
  CHECK(to_sexpr(Diagram::z_spider(1, 2, 0.0)) == "(Z 1 2 0)");
  Diagram d = compose(stack(Diagram::z_spider(1, 2, 0.0), wire()),
                      stack(wire(), Diagram::x_spider(2, 1, 0.0)));
  CHECK(to_sexpr(d) ==
        "(compose (stack (Z 1 2 0) (wire)) (stack (wire) (X 2 1 0)))");
}

TEST_CASE("sexpr round-trip on random diagrams") {
  Rng rng(23);
  for (int k = 0; k < 60; ++k) {
    unsigned i = rng.range(0, 3), o = rng.range(0, 3);
    Diagram d = random_diagram(rng, i, o);
    Diagram back = parse_sexpr(to_sexpr(d));
    CHECK(structurally_equal(d, back));
  }
}

TEST_CASE("sexpr reader rejects malformed input") {
  CHECK_THROWS_AS(parse_sexpr("(frob)"), ZXError);
  CHECK_THROWS_AS(parse_sexpr("(Z 1 2"), ZXError);
  CHECK_THROWS_AS(parse_sexpr("(compose (wire))"), ZXError);
  CHECK_THROWS_AS(parse_sexpr("(wire) junk"), ZXError);
  CHECK_THROWS_AS(parse_sexpr("(compose (cap) (wire))"), ZXError);
}

TEST_CASE("accessor misuse throws") {
  CHECK_THROWS_AS(Diagram::cap().phase(), ZXError);
  CHECK_THROWS_AS(wire().first(), ZXError);
}
