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

#ifndef ZXCHECK_GRAPHREP_HPP
#define ZXCHECK_GRAPHREP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zx/diagram.hpp"

namespace zx {

using NodeId = unsigned;

struct ZxNode {
  SpiderColor color;
  double phase;
};

struct ZxEdge {
  NodeId a;
  NodeId b;
  bool hadamard = false;
};

/**
 * Adjacency view of a diagram: spiders with phases, a multiset of edges
 * (self-loops allowed, each optionally carrying a Hadamard), and ordered
 * boundary lists naming the node each global input/output attaches to.
 */
struct ZxGraph {
  std::map<NodeId, ZxNode> nodes;
  std::vector<ZxEdge> edges;
  std::vector<NodeId> inputs;
  std::vector<NodeId> outputs;

  /** Copy with edge endpoints ordered and the edge list sorted. */
  ZxGraph normalized() const;
};

/** Equality of normalized graphs; phases compared modulo 2*pi. */
bool graphs_equal(const ZxGraph& a, const ZxGraph& b);

/** Root-to-leaf constructor path: 0 = first child, 1 = second child. */
using DiagramPath = std::vector<std::uint8_t>;

/**
 * Assigns consecutive ids (from 1) to the fundamental components: spiders,
 * caps and cups. Empty, Swap and the composition constructors carry no id.
 * Components are ordered by vertical position (Stack choices along their
 * path) and then horizontal position (Compose choices), so a grid-shaped
 * diagram numbers in reading order.
 */
std::map<DiagramPath, NodeId> number_nodes(const Diagram& d);

/** Boundary annotation: the nearest component id for each boundary wire. */
struct EdgeAnnotation {
  std::vector<NodeId> in_labels;
  std::vector<NodeId> out_labels;
};

/**
 * The edge-numbering pass: a component with id x and arities (n, m) yields
 * ([x] * n, [x] * m); Stack concatenates child lists; Compose carries the
 * outer lists forward. Throws ZXError if the diagram contains a Swap
 * (annotate_with_swaps handles that case).
 */
EdgeAnnotation number_edges(const Diagram& d);

/**
 * Full conversion for swap-free diagrams: at every Compose the left
 * out-labels are paired positionally with the right in-labels, one edge
 * per wire; global boundaries come from the root annotation.
 */
ZxGraph create_edges(const Diagram& d);

/**
 * Conversion via a union-find over generator ports: Compose unifies the
 * facing ports, Swap unifies its input k with output 1-k contributing no
 * node. Agrees exactly with create_edges on swap-free diagrams. Wires
 * running boundary-to-boundary through Swaps only are anchored on a fresh
 * phase-0 Z node so the graph can name them.
 */
ZxGraph annotate_with_swaps(const Diagram& d);

/**
 * The explicit Hadamard chain (the Euler form of H) recognized by the
 * restricted-graph conversion as an edge marker rather than as nodes.
 */
Diagram hadamard_chain();

/**
 * Rewrites a diagram into the restricted block form: caps/cups become
 * phase-0 Z spiders, X spiders become Z spiders conjugated by Hadamard
 * chains, and spiders are split into trees with at most one input and two
 * outputs (or the reverse), the phase kept on a single spider. Semantics
 * is preserved up to a non-zero scalar; the cap/cup and splitting steps
 * are entrywise exact.
 */
Diagram to_restricted_form(const Diagram& d);

/**
 * True iff every leaf is a legal-arity Z spider, Empty or Swap, with all
 * Hadamard content in explicit hadamard_chain() occurrences.
 */
bool is_restricted_form(const Diagram& d);

/**
 * Restricted-form conversion pipeline: to_restricted_form, union-find
 * conversion with Hadamard chains collapsed onto edges, then remaining
 * plain spider-spider wires rewritten as two Hadamard edges through a
 * fresh phase-0 Z node (and likewise Hadamard-carrying boundary wires
 * buffered). The result satisfies is_restricted_graph.
 */
ZxGraph to_restricted_graph(const Diagram& d);

/**
 * Graph-side restricted invariant: only Z nodes, only Hadamard edges, and
 * every node's degree (edge incidences plus boundary attachments) at most
 * 3, matching one-input/up-to-two-outputs spiders or the reverse.
 */
bool is_restricted_graph(const ZxGraph& g);

/**
 * Structural fusion: merges node b into a, adding phases modulo 2*pi.
 * Requires distinct same-color nodes joined by at least one plain edge;
 * all plain a-b edges disappear, the rest of b's edges re-attach to a.
 * Purely structural; no semantic claim is made for graphs.
 */
ZxGraph fuse_spiders(const ZxGraph& g, NodeId a, NodeId b);

enum class ExportFormat { Json, Dot };

/**
 * JSON ("schema": "zxgraph/1", nodes/edges/inputs/outputs, stable id
 * order) or DOT (undirected, Hadamard edges dashed, boundary pseudo-nodes).
 */
std::string export_graph(const ZxGraph& g, ExportFormat format);

}  // namespace zx

#endif  // ZXCHECK_GRAPHREP_HPP
