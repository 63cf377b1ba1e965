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

#ifndef ZXCHECK_DIAGRAM_HPP
#define ZXCHECK_DIAGRAM_HPP

#include <memory>
#include <stdexcept>
#include <string>

namespace zx {

/** Generic error raised by diagram construction and evaluation. */
class ZXError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DiagramKind {
  Empty,
  Cap,
  Cup,
  Swap,
  ZSpider,
  XSpider,
  Compose,
  Stack,
};

enum class SpiderColor { Z, X };

/** Reduces an angle in radians into [0, 2*pi). */
double reduce_phase(double alpha);

/** True iff the two angles agree modulo 2*pi within 1e-12. */
bool phase_equal(double a, double b);

/**
 * An immutable ZX diagram in block representation.
 *
 * A diagram is one of eight constructors: Empty, Cap, Cup, Swap, a Z or X
 * spider with fixed input/output arities and a phase, a sequential
 * composition of two diagrams, or a vertical stack of two diagrams. Every
 * diagram carries its boundary sizes n_in/n_out; compose() checks that the
 * inner boundaries agree, so a constructed Diagram is always well-typed.
 *
 * Diagrams are cheap-to-copy handles to shared immutable nodes and may be
 * used freely across threads.
 */
class Diagram {
 public:
  static Diagram empty();
  static Diagram cap();
  static Diagram cup();
  static Diagram swap_wires();
  /** Spider phases are reduced into [0, 2*pi) on construction. */
  static Diagram z_spider(unsigned n_in, unsigned n_out, double alpha);
  static Diagram x_spider(unsigned n_in, unsigned n_out, double alpha);

  DiagramKind kind() const { return node_->kind; }
  unsigned n_in() const { return node_->n_in; }
  unsigned n_out() const { return node_->n_out; }
  bool is_spider() const {
    return node_->kind == DiagramKind::ZSpider ||
           node_->kind == DiagramKind::XSpider;
  }
  bool is_composite() const {
    return node_->kind == DiagramKind::Compose ||
           node_->kind == DiagramKind::Stack;
  }

  /** Spider phase. Only valid when is_spider(). */
  double phase() const;
  /** Spider color. Only valid when is_spider(). */
  SpiderColor color() const;

  /** First child of a Compose/Stack. Only valid when is_composite(). */
  Diagram first() const;
  /** Second child of a Compose/Stack. Only valid when is_composite(). */
  Diagram second() const;

  friend Diagram compose(const Diagram& a, const Diagram& b);
  friend Diagram stack(const Diagram& a, const Diagram& b);

 private:
  struct Node {
    DiagramKind kind;
    unsigned n_in;
    unsigned n_out;
    double alpha;
    std::shared_ptr<const Node> first;
    std::shared_ptr<const Node> second;
  };

  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/**
 * Sequential composition: a is applied first, then b.
 * Throws ZXError unless n_out(a) == n_in(b).
 */
Diagram compose(const Diagram& a, const Diagram& b);

/** Vertical stack with a on top; boundary sizes add. */
Diagram stack(const Diagram& a, const Diagram& b);

/** The single wire, encoded as ZSpider(1, 1, 0). */
Diagram wire();

/** n parallel wires; n_wire(0) is Empty. */
Diagram n_wire(unsigned n);

/**
 * Replaces every Z spider by an X spider with the same arities and phase
 * and vice versa. Cap, Cup, Swap and Empty are unchanged. An involution.
 */
Diagram color_swap(const Diagram& d);

/**
 * Structural equality: same constructor tree, with spider phases compared
 * modulo 2*pi at tolerance 1e-12.
 */
bool structurally_equal(const Diagram& a, const Diagram& b);

/**
 * Canonical textual debug form, e.g.
 *   (compose (stack (Z 1 2 0) (wire)) (stack (wire) (X 2 1 0)))
 * ZSpider(1,1,0) prints as (wire). Phases print with enough digits to
 * round-trip bit-exactly through parse_sexpr().
 */
std::string to_sexpr(const Diagram& d);

/** Reads the debug form back. Throws ZXError on malformed input. */
Diagram parse_sexpr(const std::string& text);

}  // namespace zx

#endif  // ZXCHECK_DIAGRAM_HPP
