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

#include <json.hpp>
#include <numbers>
#include <set>

#include "testutil.hpp"
#include "zx/graphrep.hpp"
#include "zx/propcheck.hpp"
#include "zx/rules.hpp"

using namespace zx;

namespace {
constexpr double kPi = std::numbers::pi;

/**
 * The worked annotation example: a 2x2 spider grid with one composition.
 * Left column: a (1,1) spider over a (1,2) spider; right column: a (2,1)
 * spider over a (1,1) spider. The middle wire runs bottom-left to
 * top-right.
 */
Diagram annotation_example() {
  Diagram left = stack(Diagram::z_spider(1, 1, 0.0),
                       Diagram::z_spider(1, 2, 0.0));
  Diagram right = stack(Diagram::z_spider(2, 1, 0.0),
                        Diagram::z_spider(1, 1, 0.0));
  return compose(left, right);
}

std::multiset<std::tuple<NodeId, NodeId, bool>> edge_set(const ZxGraph& g) {
  std::multiset<std::tuple<NodeId, NodeId, bool>> out;
  for (const ZxEdge& e : g.normalized().edges)
    out.insert({e.a, e.b, e.hadamard});
  return out;
}

unsigned count_fundamental_leaves(const Diagram& d) {
  switch (d.kind()) {
    case DiagramKind::ZSpider:
    case DiagramKind::XSpider:
    case DiagramKind::Cap:
    case DiagramKind::Cup:
      return 1;
    case DiagramKind::Compose:
    case DiagramKind::Stack:
      return count_fundamental_leaves(d.first()) +
             count_fundamental_leaves(d.second());
    default:
      return 0;
  }
}

unsigned total_compose_width(const Diagram& d) {
  if (!d.is_composite()) return 0;
  unsigned sum = total_compose_width(d.first()) +
                 total_compose_width(d.second());
  if (d.kind() == DiagramKind::Compose) sum += d.first().n_out();
  return sum;
}
}  // namespace

TEST_CASE("node numbering") {
  Diagram single = Diagram::z_spider(2, 1, 0.3);
  auto ids = number_nodes(single);
  REQUIRE(ids.size() == 1);
  CHECK(ids.at(DiagramPath{}) == 1);

  Diagram pair = compose(Diagram::z_spider(1, 1, 0.1),
                         Diagram::x_spider(1, 1, 0.2));
  auto pair_ids = number_nodes(pair);
  CHECK(pair_ids.at(DiagramPath{0}) == 1);
  CHECK(pair_ids.at(DiagramPath{1}) == 2);

  // The grid example numbers in reading order: top row, then bottom row.
  auto grid_ids = number_nodes(annotation_example());
  CHECK(grid_ids.at(DiagramPath{0, 0}) == 1);  // top-left
  CHECK(grid_ids.at(DiagramPath{1, 0}) == 2);  // top-right
  CHECK(grid_ids.at(DiagramPath{0, 1}) == 3);  // bottom-left
  CHECK(grid_ids.at(DiagramPath{1, 1}) == 4);  // bottom-right

  // Empty and Swap carry no number.
  CHECK(number_nodes(Diagram::swap_wires()).empty());
  CHECK(number_nodes(Diagram::empty()).empty());
}

TEST_CASE("edge numbering") {
  EdgeAnnotation single = number_edges(Diagram::z_spider(2, 1, 0.5));
  CHECK(single.in_labels == std::vector<NodeId>{1, 1});
  CHECK(single.out_labels == std::vector<NodeId>{1});

  EdgeAnnotation stacked = number_edges(
      stack(Diagram::z_spider(1, 1, 0.0), Diagram::z_spider(1, 1, 0.0)));
  CHECK(stacked.in_labels == std::vector<NodeId>{1, 2});
  CHECK(stacked.out_labels == std::vector<NodeId>{1, 2});

  EdgeAnnotation grid = number_edges(annotation_example());
  CHECK(grid.in_labels == std::vector<NodeId>{1, 3});
  CHECK(grid.out_labels == std::vector<NodeId>{2, 4});

  CHECK_THROWS_WITH_AS(number_edges(Diagram::swap_wires()),
                       doctest::Contains("annotate_with_swaps"), ZXError);
}

TEST_CASE("create_edges reproduces the worked example") {
  ZxGraph g = create_edges(annotation_example());
  CHECK(g.nodes.size() == 4);
  CHECK(edge_set(g) ==
        std::multiset<std::tuple<NodeId, NodeId, bool>>{
            {1, 2, false}, {2, 3, false}, {3, 4, false}});
  CHECK(g.inputs == std::vector<NodeId>{1, 3});
  CHECK(g.outputs == std::vector<NodeId>{2, 4});
}

TEST_CASE("create_edges simple traces") {
  ZxGraph chain = create_edges(
      compose(Diagram::z_spider(1, 1, 0.1), Diagram::z_spider(1, 1, 0.2)));
  CHECK(edge_set(chain) ==
        std::multiset<std::tuple<NodeId, NodeId, bool>>{{1, 2, false}});
  CHECK(chain.inputs == std::vector<NodeId>{1});
  CHECK(chain.outputs == std::vector<NodeId>{2});

  ZxGraph disconnected = create_edges(
      stack(Diagram::z_spider(1, 1, 0.0), Diagram::x_spider(1, 1, 0.0)));
  CHECK(disconnected.edges.empty());
  CHECK(disconnected.inputs.size() == 2);
  CHECK(disconnected.outputs.size() == 2);
  CHECK(disconnected.nodes.at(2).color == SpiderColor::X);

  // Cap into cup: two parallel edges between the two nodes.
  ZxGraph loop = create_edges(compose(Diagram::cap(), Diagram::cup()));
  CHECK(loop.nodes.size() == 2);
  CHECK(edge_set(loop) ==
        std::multiset<std::tuple<NodeId, NodeId, bool>>{{1, 2, false},
                                                        {1, 2, false}});
  CHECK(loop.nodes.at(1).color == SpiderColor::Z);
  CHECK(loop.nodes.at(1).phase == 0.0);
}

TEST_CASE("union-find conversion handles swaps") {
  // Two spiders, a crossing, then two spiders: connectivity crosses over.
  Diagram crossed = compose(
      stack(Diagram::z_spider(1, 1, 0.1), Diagram::z_spider(1, 1, 0.2)),
      compose(Diagram::swap_wires(),
              stack(Diagram::z_spider(1, 1, 0.3),
                    Diagram::z_spider(1, 1, 0.4))));
  ZxGraph g = annotate_with_swaps(crossed);
  CHECK(g.nodes.size() == 4);
  CHECK(edge_set(g) ==
        std::multiset<std::tuple<NodeId, NodeId, bool>>{{1, 4, false},
                                                        {2, 3, false}});

  // Swap just before the outputs permutes the boundary assignment.
  Diagram out_swapped = compose(
      stack(Diagram::z_spider(1, 1, 0.1), Diagram::z_spider(1, 1, 0.2)),
      Diagram::swap_wires());
  ZxGraph h = annotate_with_swaps(out_swapped);
  CHECK(h.inputs == std::vector<NodeId>{1, 2});
  CHECK(h.outputs == std::vector<NodeId>{2, 1});

  // A bare swap has no spiders: fresh anchors name the boundary wires.
  ZxGraph bare = annotate_with_swaps(Diagram::swap_wires());
  CHECK(bare.nodes.size() == 2);
  CHECK(bare.edges.empty());
  CHECK(bare.inputs == std::vector<NodeId>{1, 2});
  CHECK(bare.outputs == std::vector<NodeId>{2, 1});
}

TEST_CASE("union-find agrees with the literal pass on swap-free diagrams") {
  Rng rng(83);
  DiagramGenOptions opts;
  opts.allow_swap = false;
  for (int k = 0; k < 60; ++k) {
    unsigned i = rng.range(0, 4), o = rng.range(0, 4);
    Diagram d = random_diagram(rng, i, o, opts);
    CHECK(graphs_equal(create_edges(d), annotate_with_swaps(d)));
  }
}

TEST_CASE("restricted block form") {
  Diagram cap_restricted = to_restricted_form(Diagram::cap());
  CHECK(structurally_equal(cap_restricted, Diagram::z_spider(0, 2, 0.0)));
  CHECK(test::max_entry_distance(semantics(cap_restricted),
                                 semantics(Diagram::cap())) == 0.0);

  Diagram x_restricted = to_restricted_form(Diagram::x_spider(1, 1, 0.7));
  CHECK(is_restricted_form(x_restricted));
  CHECK(is_proportional(
      diagrams_proportional(x_restricted, Diagram::x_spider(1, 1, 0.7))));

  Diagram wide = to_restricted_form(Diagram::z_spider(1, 4, 0.0));
  CHECK(is_restricted_form(wide));
  CHECK(test::max_entry_distance(semantics(wide),
                                 semantics(Diagram::z_spider(1, 4, 0.0))) <
        1e-12);

  CHECK_FALSE(is_restricted_form(Diagram::z_spider(2, 2, 0.1)));
  CHECK_FALSE(is_restricted_form(Diagram::cap()));
  CHECK(is_restricted_form(Diagram::z_spider(0, 2, 0.0)));
}

TEST_CASE("restricted form preserves semantics on random diagrams") {
  Rng rng(89);
  for (int k = 0; k < 50; ++k) {
    unsigned i = rng.range(0, 3), o = rng.range(0, 3);
    Diagram d = random_diagram(rng, i, o);
    Diagram r = to_restricted_form(d);
    CHECK(is_restricted_form(r));
    CHECK_MESSAGE(is_proportional(diagrams_proportional(d, r, 1e-7)),
                  "diagram: ", to_sexpr(d));
  }
}

TEST_CASE("restricted graph pipeline") {
  Rng rng(97);
  for (int k = 0; k < 40; ++k) {
    unsigned i = rng.range(0, 3), o = rng.range(0, 3);
    Diagram d = random_diagram(rng, i, o);
    ZxGraph g = to_restricted_graph(d);
    CHECK(is_restricted_graph(g));
    CHECK(g.inputs.size() == i);
    CHECK(g.outputs.size() == o);
    for (const auto& [id, node] : g.nodes)
      CHECK(node.color == SpiderColor::Z);
    for (const ZxEdge& e : g.edges) CHECK(e.hadamard);
  }

  // A lone X spider becomes a Z node with Hadamard-buffered boundaries.
  ZxGraph x = to_restricted_graph(Diagram::x_spider(1, 1, 0.4));
  CHECK(is_restricted_graph(x));
  ZxGraph plain = to_restricted_graph(
      compose(Diagram::z_spider(1, 1, 0.1), Diagram::z_spider(1, 1, 0.2)));
  // The plain wire is bridged by a fresh node carrying two Hadamard edges.
  CHECK(plain.nodes.size() == 3);
  CHECK(plain.edges.size() == 2);
  CHECK(is_restricted_graph(plain));
}

TEST_CASE("conservation laws on swap-free restricted diagrams") {
  Rng rng(101);
  DiagramGenOptions opts;
  opts.allow_swap = false;
  for (int k = 0; k < 40; ++k) {
    unsigned i = rng.range(0, 3), o = rng.range(0, 3);
    Diagram r = to_restricted_form(random_diagram(rng, i, o, opts));
    ZxGraph g = create_edges(r);
    CHECK(g.nodes.size() == count_fundamental_leaves(r));
    CHECK(g.edges.size() == total_compose_width(r));
    CHECK(g.inputs.size() == r.n_in());
    CHECK(g.outputs.size() == r.n_out());
    CHECK(graphs_equal(g, annotate_with_swaps(r)));
  }
}

TEST_CASE("spider fusion") {
  ZxGraph g;
  g.nodes[1] = {SpiderColor::Z, 0.4};
  g.nodes[2] = {SpiderColor::Z, 0.8};
  g.nodes[3] = {SpiderColor::X, 0.0};
  g.edges.push_back({1, 2, false});
  g.edges.push_back({2, 3, false});
  g.inputs = {1};
  g.outputs = {2, 3};

  ZxGraph fused = fuse_spiders(g, 1, 2);
  CHECK(fused.nodes.size() == 2);
  CHECK(fused.nodes.at(1).phase == doctest::Approx(1.2));
  CHECK(edge_set(fused) ==
        std::multiset<std::tuple<NodeId, NodeId, bool>>{{1, 3, false}});
  CHECK(fused.outputs == std::vector<NodeId>{1, 3});
  CHECK(fused.inputs == std::vector<NodeId>{1});

  // All parallel plain edges disappear at once.
  ZxGraph multi;
  multi.nodes[1] = {SpiderColor::Z, 0.1};
  multi.nodes[2] = {SpiderColor::Z, 0.2};
  multi.edges = {{1, 2, false}, {1, 2, false}, {1, 2, false}};
  ZxGraph merged = fuse_spiders(multi, 1, 2);
  CHECK(merged.nodes.size() == 1);
  CHECK(merged.edges.empty());

  // A Hadamard edge between the pair survives as a self-loop.
  ZxGraph withh = multi;
  withh.edges.push_back({2, 1, true});
  ZxGraph loops = fuse_spiders(withh, 1, 2);
  CHECK(loops.edges.size() == 1);
  CHECK(loops.edges[0].a == 1);
  CHECK(loops.edges[0].b == 1);
  CHECK(loops.edges[0].hadamard);

  ZxGraph honly;
  honly.nodes[1] = {SpiderColor::Z, 0.0};
  honly.nodes[2] = {SpiderColor::Z, 0.0};
  honly.edges = {{1, 2, true}};
  CHECK_THROWS_WITH_AS(fuse_spiders(honly, 1, 2),
                       doctest::Contains("plain"), ZXError);
  CHECK_THROWS_AS(fuse_spiders(g, 1, 3), ZXError);  // color mismatch
  CHECK_THROWS_AS(fuse_spiders(g, 1, 1), ZXError);
  CHECK_THROWS_AS(fuse_spiders(g, 1, 9), ZXError);
}

TEST_CASE("json export") {
  ZxGraph empty;
  nlohmann::json j = nlohmann::json::parse(
      export_graph(empty, ExportFormat::Json));
  CHECK(j["schema"] == "zxgraph/1");
  CHECK(j["nodes"].empty());
  CHECK(j["edges"].empty());
  CHECK(j["inputs"].empty());
  CHECK(j["outputs"].empty());

  nlohmann::json grid = nlohmann::json::parse(
      export_graph(create_edges(annotation_example()), ExportFormat::Json));
  CHECK(grid["nodes"].size() == 4);
  CHECK(grid["edges"].size() == 3);
  CHECK(grid["inputs"] == nlohmann::json::array({1, 3}));
  CHECK(grid["outputs"] == nlohmann::json::array({2, 4}));
  CHECK(grid["nodes"][0]["color"] == "Z");
}

TEST_CASE("dot export parses") {
  ZxGraph g = to_restricted_graph(annotation_example());
  std::string dot = export_graph(g, ExportFormat::Dot);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(test::dot_well_formed(dot));
  CHECK(test::dot_well_formed(
      export_graph(ZxGraph{}, ExportFormat::Dot)));
}
