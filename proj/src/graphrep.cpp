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

#include "zx/graphrep.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <tuple>

#include <json.hpp>

#include "zx/gates.hpp"

namespace zx {

namespace {

bool is_fundamental(const Diagram& d) {
  switch (d.kind()) {
    case DiagramKind::ZSpider:
    case DiagramKind::XSpider:
    case DiagramKind::Cap:
    case DiagramKind::Cup:
      return true;
    default:
      return false;
  }
}

bool is_marker(const Diagram& d) {
  static const Diagram marker = hadamard_chain();
  return d.kind() == DiagramKind::Compose && structurally_equal(d, marker);
}

struct LeafRecord {
  DiagramPath path;
  std::vector<std::uint8_t> v_pos;  // Stack choices along the path
  std::vector<std::uint8_t> h_pos;  // Compose choices along the path
};

void collect_leaves(const Diagram& d, DiagramPath& path,
                    std::vector<std::uint8_t>& v, std::vector<std::uint8_t>& h,
                    bool collapse_markers, std::vector<LeafRecord>& out) {
  if (collapse_markers && is_marker(d)) return;
  if (is_fundamental(d)) {
    out.push_back({path, v, h});
    return;
  }
  if (!d.is_composite()) return;  // Empty, Swap
  bool is_stack = d.kind() == DiagramKind::Stack;
  for (std::uint8_t child = 0; child < 2; ++child) {
    path.push_back(child);
    (is_stack ? v : h).push_back(child);
    collect_leaves(child == 0 ? d.first() : d.second(), path, v, h,
                   collapse_markers, out);
    (is_stack ? v : h).pop_back();
    path.pop_back();
  }
}

std::map<DiagramPath, NodeId> number_nodes_impl(const Diagram& d,
                                                bool collapse_markers) {
  std::vector<LeafRecord> leaves;
  DiagramPath path;
  std::vector<std::uint8_t> v, h;
  collect_leaves(d, path, v, h, collapse_markers, leaves);
  auto lex_less = [](const std::vector<std::uint8_t>& a,
                     const std::vector<std::uint8_t>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k)
      if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
  };
  std::stable_sort(leaves.begin(), leaves.end(),
                   [&](const LeafRecord& a, const LeafRecord& b) {
                     int v = lex_less(a.v_pos, b.v_pos);
                     if (v != 0) return v < 0;
                     return lex_less(a.h_pos, b.h_pos) < 0;
                   });
  std::map<DiagramPath, NodeId> ids;
  NodeId next = 1;
  for (const LeafRecord& leaf : leaves) ids.emplace(leaf.path, next++);
  return ids;
}

ZxNode node_data(const Diagram& leaf) {
  if (leaf.is_spider()) return {leaf.color(), leaf.phase()};
  return {SpiderColor::Z, 0.0};  // caps and cups act as phase-0 spiders
}

Diagram subdiagram_at(const Diagram& d, const DiagramPath& path) {
  Diagram cur = d;
  for (std::uint8_t step : path) cur = step == 0 ? cur.first() : cur.second();
  return cur;
}

// ---------------------------------------------------------------------
// Literal conversion (swap-free)
// ---------------------------------------------------------------------

struct Annotation {
  std::vector<NodeId> in;
  std::vector<NodeId> out;
};

Annotation annotate(const Diagram& d, DiagramPath& path,
                    const std::map<DiagramPath, NodeId>& ids,
                    ZxGraph* graph) {
  if (is_fundamental(d)) {
    NodeId id = ids.at(path);
    return {std::vector<NodeId>(d.n_in(), id),
            std::vector<NodeId>(d.n_out(), id)};
  }
  switch (d.kind()) {
    case DiagramKind::Empty:
      return {};
    case DiagramKind::Swap:
      throw ZXError(
          "number_edges: diagram contains a Swap; use annotate_with_swaps");
    case DiagramKind::Stack: {
      path.push_back(0);
      Annotation a = annotate(d.first(), path, ids, graph);
      path.back() = 1;
      Annotation b = annotate(d.second(), path, ids, graph);
      path.pop_back();
      a.in.insert(a.in.end(), b.in.begin(), b.in.end());
      a.out.insert(a.out.end(), b.out.begin(), b.out.end());
      return a;
    }
    case DiagramKind::Compose: {
      path.push_back(0);
      Annotation a = annotate(d.first(), path, ids, graph);
      path.back() = 1;
      Annotation b = annotate(d.second(), path, ids, graph);
      path.pop_back();
      if (graph) {
        for (std::size_t k = 0; k < a.out.size(); ++k)
          graph->edges.push_back({a.out[k], b.in[k], false});
      }
      return {std::move(a.in), std::move(b.out)};
    }
    default:
      throw ZXError("annotate: unknown diagram kind");
  }
}

// ---------------------------------------------------------------------
// Union-find conversion
// ---------------------------------------------------------------------

/** Union-find whose elements carry a Hadamard parity to their parent. */
class ParityUnionFind {
 public:
  int make() {
    parent_.push_back(static_cast<int>(parent_.size()));
    parity_.push_back(0);
    return parent_.back();
  }

  std::pair<int, std::uint8_t> find(int x) {
    if (parent_[x] == x) return {x, 0};
    auto [root, p] = find(parent_[x]);
    parent_[x] = root;
    parity_[x] = static_cast<std::uint8_t>(parity_[x] ^ p);
    return {root, parity_[x]};
  }

  void unite(int a, int b, std::uint8_t parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return;
    parent_[rb] = ra;
    parity_[rb] = static_cast<std::uint8_t>(pa ^ pb ^ parity);
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<int> parent_;
  std::vector<std::uint8_t> parity_;
};

struct PortAnnotation {
  std::vector<int> in;
  std::vector<int> out;
};

struct UfState {
  ParityUnionFind uf;
  std::vector<std::optional<NodeId>> anchor;  // element -> owning node

  int make_port(std::optional<NodeId> node) {
    int e = uf.make();
    anchor.push_back(node);
    return e;
  }
};

PortAnnotation uf_walk(const Diagram& d, DiagramPath& path,
                       const std::map<DiagramPath, NodeId>& ids,
                       bool collapse_markers, UfState& st) {
  if (collapse_markers && is_marker(d)) {
    int a = st.make_port(std::nullopt);
    int b = st.make_port(std::nullopt);
    st.uf.unite(a, b, 1);
    return {{a}, {b}};
  }
  if (is_fundamental(d)) {
    NodeId id = ids.at(path);
    PortAnnotation ann;
    for (unsigned k = 0; k < d.n_in(); ++k)
      ann.in.push_back(st.make_port(id));
    for (unsigned k = 0; k < d.n_out(); ++k)
      ann.out.push_back(st.make_port(id));
    return ann;
  }
  switch (d.kind()) {
    case DiagramKind::Empty:
      return {};
    case DiagramKind::Swap: {
      int a = st.make_port(std::nullopt);
      int b = st.make_port(std::nullopt);
      return {{a, b}, {b, a}};
    }
    case DiagramKind::Stack: {
      path.push_back(0);
      PortAnnotation a = uf_walk(d.first(), path, ids, collapse_markers, st);
      path.back() = 1;
      PortAnnotation b = uf_walk(d.second(), path, ids, collapse_markers, st);
      path.pop_back();
      a.in.insert(a.in.end(), b.in.begin(), b.in.end());
      a.out.insert(a.out.end(), b.out.begin(), b.out.end());
      return a;
    }
    case DiagramKind::Compose: {
      path.push_back(0);
      PortAnnotation a = uf_walk(d.first(), path, ids, collapse_markers, st);
      path.back() = 1;
      PortAnnotation b = uf_walk(d.second(), path, ids, collapse_markers, st);
      path.pop_back();
      for (std::size_t k = 0; k < a.out.size(); ++k)
        st.uf.unite(a.out[k], b.in[k], 0);
      return {std::move(a.in), std::move(b.out)};
    }
    default:
      throw ZXError("uf_walk: unknown diagram kind");
  }
}

struct ConvertResult {
  ZxGraph graph;
  // Hadamard parity between each boundary wire and its node; only ever set
  // when Hadamard chains are being collapsed.
  std::vector<std::uint8_t> input_parity;
  std::vector<std::uint8_t> output_parity;
};

ConvertResult uf_convert(const Diagram& d, bool collapse_markers) {
  auto ids = number_nodes_impl(d, collapse_markers);

  ConvertResult res;
  for (const auto& [path, id] : ids)
    res.graph.nodes.emplace(id, node_data(subdiagram_at(d, path)));

  UfState st;
  DiagramPath path;
  PortAnnotation root = uf_walk(d, path, ids, collapse_markers, st);

  struct Slot {
    bool is_input;
    std::size_t pos;
  };
  std::map<int, std::vector<Slot>> slots;
  for (std::size_t k = 0; k < root.in.size(); ++k)
    slots[root.in[k]].push_back({true, k});
  for (std::size_t k = 0; k < root.out.size(); ++k)
    slots[root.out[k]].push_back({false, k});

  struct Endpoint {
    std::optional<NodeId> node;  // anchored port
    std::optional<Slot> slot;    // root boundary wire
    std::uint8_t parity;         // Hadamard parity relative to the class root
  };
  std::map<int, std::vector<Endpoint>> classes;
  for (std::size_t e = 0; e < st.uf.size(); ++e) {
    auto [root_elem, parity] = st.uf.find(static_cast<int>(e));
    if (st.anchor[e])
      classes[root_elem].push_back({st.anchor[e], std::nullopt, parity});
    if (auto it = slots.find(static_cast<int>(e)); it != slots.end())
      for (const Slot& s : it->second)
        classes[root_elem].push_back({std::nullopt, s, parity});
  }

  res.graph.inputs.assign(root.in.size(), 0);
  res.graph.outputs.assign(root.out.size(), 0);
  res.input_parity.assign(root.in.size(), 0);
  res.output_parity.assign(root.out.size(), 0);

  NodeId next_id = 1;
  for (const auto& [id, node] : res.graph.nodes) next_id = id + 1;

  auto set_boundary = [&](const Slot& s, NodeId node, std::uint8_t parity) {
    if (s.is_input) {
      res.graph.inputs[s.pos] = node;
      res.input_parity[s.pos] = parity;
    } else {
      res.graph.outputs[s.pos] = node;
      res.output_parity[s.pos] = parity;
    }
  };

  for (const auto& [root_elem, ends] : classes) {
    if (ends.size() != 2)
      throw ZXError("conversion: wire net with " +
                    std::to_string(ends.size()) + " endpoints");
    const Endpoint &p = ends[0], &q = ends[1];
    std::uint8_t parity = static_cast<std::uint8_t>(p.parity ^ q.parity);
    if (p.node && q.node) {
      res.graph.edges.push_back({*p.node, *q.node, parity != 0});
    } else if (p.node || q.node) {
      const Endpoint& with_node = p.node ? p : q;
      const Endpoint& with_slot = p.node ? q : p;
      set_boundary(*with_slot.slot, *with_node.node, parity);
    } else {
      // A wire running boundary to boundary (through Swaps or Hadamard
      // chains only): anchor it on fresh identity nodes.
      NodeId w = next_id++;
      res.graph.nodes.emplace(w, ZxNode{SpiderColor::Z, 0.0});
      if (parity == 0) {
        set_boundary(*p.slot, w, 0);
        set_boundary(*q.slot, w, 0);
      } else {
        NodeId w2 = next_id++;
        res.graph.nodes.emplace(w2, ZxNode{SpiderColor::Z, 0.0});
        res.graph.edges.push_back({w, w2, true});
        set_boundary(*p.slot, w, 0);
        set_boundary(*q.slot, w2, 0);
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------
// Restricted block form
// ---------------------------------------------------------------------

Diagram pad_below(const Diagram& d, unsigned n) {
  return n == 0 ? d : stack(d, n_wire(n));
}

bool legal_restricted_arity(unsigned n_in, unsigned n_out) {
  return n_in <= 2 && n_out <= 2 && n_in + n_out <= 3;
}

/**
 * Splits a Z spider into a tree of legal-arity Z spiders by repeatedly
 * peeling a phase-0 collector off the wider boundary. Each step is the
 * inverse of a spider fusion and preserves semantics exactly.
 */
Diagram split_z(unsigned n_in, unsigned n_out, double alpha) {
  if (legal_restricted_arity(n_in, n_out))
    return Diagram::z_spider(n_in, n_out, alpha);
  if (n_in >= 3 || (n_in == 2 && n_out >= 2)) {
    Diagram collector = pad_below(Diagram::z_spider(2, 1, 0.0), n_in - 2);
    return compose(collector, split_z(n_in - 1, n_out, alpha));
  }
  // Remaining illegal shapes have n_in <= 1 and n_out >= 3.
  Diagram splitter = pad_below(Diagram::z_spider(1, 2, 0.0), n_out - 2);
  return compose(split_z(n_in, n_out - 1, alpha), splitter);
}

Diagram marker_stack(unsigned n) {
  if (n == 0) return Diagram::empty();
  Diagram d = hadamard_chain();
  for (unsigned k = 1; k < n; ++k) d = stack(hadamard_chain(), d);
  return d;
}

}  // namespace

ZxGraph ZxGraph::normalized() const {
  ZxGraph out = *this;
  for (ZxEdge& e : out.edges)
    if (e.a > e.b) std::swap(e.a, e.b);
  std::sort(out.edges.begin(), out.edges.end(),
            [](const ZxEdge& x, const ZxEdge& y) {
              return std::tie(x.a, x.b, x.hadamard) <
                     std::tie(y.a, y.b, y.hadamard);
            });
  return out;
}

bool graphs_equal(const ZxGraph& a, const ZxGraph& b) {
  ZxGraph x = a.normalized(), y = b.normalized();
  if (x.inputs != y.inputs || x.outputs != y.outputs) return false;
  if (x.nodes.size() != y.nodes.size() || x.edges.size() != y.edges.size())
    return false;
  for (auto itx = x.nodes.begin(), ity = y.nodes.begin();
       itx != x.nodes.end(); ++itx, ++ity) {
    if (itx->first != ity->first) return false;
    if (itx->second.color != ity->second.color) return false;
    if (!phase_equal(itx->second.phase, ity->second.phase)) return false;
  }
  for (std::size_t k = 0; k < x.edges.size(); ++k) {
    if (x.edges[k].a != y.edges[k].a || x.edges[k].b != y.edges[k].b ||
        x.edges[k].hadamard != y.edges[k].hadamard)
      return false;
  }
  return true;
}

std::map<DiagramPath, NodeId> number_nodes(const Diagram& d) {
  return number_nodes_impl(d, false);
}

EdgeAnnotation number_edges(const Diagram& d) {
  auto ids = number_nodes_impl(d, false);
  DiagramPath path;
  Annotation ann = annotate(d, path, ids, nullptr);
  return {std::move(ann.in), std::move(ann.out)};
}

ZxGraph create_edges(const Diagram& d) {
  auto ids = number_nodes_impl(d, false);
  ZxGraph graph;
  for (const auto& [path, id] : ids)
    graph.nodes.emplace(id, node_data(subdiagram_at(d, path)));
  DiagramPath path;
  Annotation root = annotate(d, path, ids, &graph);
  graph.inputs = std::move(root.in);
  graph.outputs = std::move(root.out);
  return graph;
}

ZxGraph annotate_with_swaps(const Diagram& d) {
  return uf_convert(d, false).graph;
}

Diagram hadamard_chain() { return zx_hadamard(); }

Diagram to_restricted_form(const Diagram& d) {
  switch (d.kind()) {
    case DiagramKind::Empty:
    case DiagramKind::Swap:
      return d;
    case DiagramKind::Cap:
      return Diagram::z_spider(0, 2, 0.0);
    case DiagramKind::Cup:
      return Diagram::z_spider(2, 0, 0.0);
    case DiagramKind::ZSpider:
      return split_z(d.n_in(), d.n_out(), d.phase());
    case DiagramKind::XSpider: {
      Diagram core = split_z(d.n_in(), d.n_out(), d.phase());
      if (d.n_in() > 0) core = compose(marker_stack(d.n_in()), core);
      if (d.n_out() > 0) core = compose(core, marker_stack(d.n_out()));
      return core;
    }
    case DiagramKind::Compose:
      return compose(to_restricted_form(d.first()),
                     to_restricted_form(d.second()));
    case DiagramKind::Stack:
      return stack(to_restricted_form(d.first()),
                   to_restricted_form(d.second()));
  }
  throw ZXError("to_restricted_form: unknown diagram kind");
}

bool is_restricted_form(const Diagram& d) {
  if (is_marker(d)) return true;
  switch (d.kind()) {
    case DiagramKind::Empty:
    case DiagramKind::Swap:
      return true;
    case DiagramKind::Cap:
    case DiagramKind::Cup:
    case DiagramKind::XSpider:
      return false;
    case DiagramKind::ZSpider:
      return legal_restricted_arity(d.n_in(), d.n_out());
    case DiagramKind::Compose:
    case DiagramKind::Stack:
      return is_restricted_form(d.first()) && is_restricted_form(d.second());
  }
  return false;
}

ZxGraph to_restricted_graph(const Diagram& d) {
  ConvertResult res = uf_convert(to_restricted_form(d), true);
  ZxGraph g = std::move(res.graph);

  NodeId next_id = 1;
  for (const auto& [id, node] : g.nodes) next_id = id + 1;

  // Restriction 1: a plain spider-spider wire becomes two Hadamard edges
  // through a fresh phase-0 Z node.
  std::vector<ZxEdge> fixed;
  fixed.reserve(g.edges.size());
  for (const ZxEdge& e : g.edges) {
    if (e.hadamard) {
      fixed.push_back(e);
    } else {
      NodeId w = next_id++;
      g.nodes.emplace(w, ZxNode{SpiderColor::Z, 0.0});
      fixed.push_back({e.a, w, true});
      fixed.push_back({w, e.b, true});
    }
  }
  g.edges = std::move(fixed);

  // A Hadamard left on a boundary wire gets buffered through a fresh node
  // so boundary attachments stay plain.
  auto buffer_boundary = [&](std::vector<NodeId>& boundary,
                             const std::vector<std::uint8_t>& parity) {
    for (std::size_t k = 0; k < boundary.size(); ++k) {
      if (!parity[k]) continue;
      NodeId w = next_id++;
      g.nodes.emplace(w, ZxNode{SpiderColor::Z, 0.0});
      g.edges.push_back({w, boundary[k], true});
      boundary[k] = w;
    }
  };
  buffer_boundary(g.inputs, res.input_parity);
  buffer_boundary(g.outputs, res.output_parity);

  if (!is_restricted_graph(g))
    throw ZXError("to_restricted_graph: restricted invariant violated");
  return g;
}

bool is_restricted_graph(const ZxGraph& g) {
  std::map<NodeId, unsigned> degree;
  for (const auto& [id, node] : g.nodes) {
    if (node.color != SpiderColor::Z) return false;
    degree[id] = 0;
  }
  for (const ZxEdge& e : g.edges) {
    if (!e.hadamard) return false;
    if (!g.nodes.count(e.a) || !g.nodes.count(e.b)) return false;
    ++degree[e.a];
    ++degree[e.b];
  }
  for (NodeId n : g.inputs) {
    if (!g.nodes.count(n)) return false;
    ++degree[n];
  }
  for (NodeId n : g.outputs) {
    if (!g.nodes.count(n)) return false;
    ++degree[n];
  }
  for (const auto& [id, deg] : degree)
    if (deg > 3) return false;
  return true;
}

ZxGraph fuse_spiders(const ZxGraph& g, NodeId a, NodeId b) {
  auto ita = g.nodes.find(a), itb = g.nodes.find(b);
  if (ita == g.nodes.end() || itb == g.nodes.end())
    throw ZXError("fuse_spiders: unknown node id");
  if (a == b) throw ZXError("fuse_spiders: nodes must be distinct");
  if (ita->second.color != itb->second.color)
    throw ZXError("fuse_spiders: nodes differ in color");
  bool plain_link = false;
  for (const ZxEdge& e : g.edges) {
    if (!e.hadamard &&
        ((e.a == a && e.b == b) || (e.a == b && e.b == a))) {
      plain_link = true;
      break;
    }
  }
  if (!plain_link)
    throw ZXError("fuse_spiders: nodes are not joined by a plain edge");

  ZxGraph out;
  out.nodes = g.nodes;
  out.nodes.erase(b);
  out.nodes.at(a).phase =
      reduce_phase(ita->second.phase + itb->second.phase);
  for (const ZxEdge& e : g.edges) {
    bool between = (e.a == a && e.b == b) || (e.a == b && e.b == a);
    if (between && !e.hadamard) continue;
    ZxEdge moved = e;
    if (moved.a == b) moved.a = a;
    if (moved.b == b) moved.b = a;
    out.edges.push_back(moved);
  }
  out.inputs = g.inputs;
  out.outputs = g.outputs;
  for (NodeId& n : out.inputs)
    if (n == b) n = a;
  for (NodeId& n : out.outputs)
    if (n == b) n = a;
  return out;
}

namespace {

std::string phase_label(double phase) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", phase);
  return buf;
}

}  // namespace

std::string export_graph(const ZxGraph& g, ExportFormat format) {
  ZxGraph n = g.normalized();
  if (format == ExportFormat::Json) {
    nlohmann::ordered_json j;
    j["schema"] = "zxgraph/1";
    j["nodes"] = nlohmann::json::array();
    for (const auto& [id, node] : n.nodes) {
      j["nodes"].push_back(
          {{"id", id},
           {"color", node.color == SpiderColor::Z ? "Z" : "X"},
           {"phase", node.phase}});
    }
    j["edges"] = nlohmann::json::array();
    for (const ZxEdge& e : n.edges)
      j["edges"].push_back(
          {{"src", e.a}, {"dst", e.b}, {"hadamard", e.hadamard}});
    j["inputs"] = n.inputs;
    j["outputs"] = n.outputs;
    return j.dump();
  }

  std::string out = "graph zxgraph {\n";
  for (const auto& [id, node] : n.nodes) {
    out += "  v" + std::to_string(id) + " [label=\"" +
           (node.color == SpiderColor::Z ? "Z " : "X ") +
           phase_label(node.phase) + "\"];\n";
  }
  for (std::size_t k = 0; k < n.inputs.size(); ++k)
    out += "  in" + std::to_string(k) + " [shape=plaintext];\n";
  for (std::size_t k = 0; k < n.outputs.size(); ++k)
    out += "  out" + std::to_string(k) + " [shape=plaintext];\n";
  for (const ZxEdge& e : n.edges) {
    out += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b);
    if (e.hadamard) out += " [style=dashed]";
    out += ";\n";
  }
  for (std::size_t k = 0; k < n.inputs.size(); ++k)
    out += "  in" + std::to_string(k) + " -- v" +
           std::to_string(n.inputs[k]) + ";\n";
  for (std::size_t k = 0; k < n.outputs.size(); ++k)
    out += "  out" + std::to_string(k) + " -- v" +
           std::to_string(n.outputs[k]) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace zx
