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

#include "zx/diagram.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <vector>

namespace zx {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPhaseTol = 1e-12;
}  // namespace

double reduce_phase(double alpha) {
  double r = std::fmod(alpha, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0;  // guards fmod rounding at the boundary
  return r;
}

bool phase_equal(double a, double b) {
  double d = std::fabs(reduce_phase(a) - reduce_phase(b));
  return d <= kPhaseTol || kTwoPi - d <= kPhaseTol;
}

Diagram Diagram::empty() {
  return Diagram(std::make_shared<const Node>(
      Node{DiagramKind::Empty, 0, 0, 0.0, nullptr, nullptr}));
}

Diagram Diagram::cap() {
  return Diagram(std::make_shared<const Node>(
      Node{DiagramKind::Cap, 0, 2, 0.0, nullptr, nullptr}));
}

Diagram Diagram::cup() {
  return Diagram(std::make_shared<const Node>(
      Node{DiagramKind::Cup, 2, 0, 0.0, nullptr, nullptr}));
}

Diagram Diagram::swap_wires() {
  return Diagram(std::make_shared<const Node>(
      Node{DiagramKind::Swap, 2, 2, 0.0, nullptr, nullptr}));
}

Diagram Diagram::z_spider(unsigned n_in, unsigned n_out, double alpha) {
  return Diagram(std::make_shared<const Node>(Node{
      DiagramKind::ZSpider, n_in, n_out, reduce_phase(alpha), nullptr,
      nullptr}));
}

Diagram Diagram::x_spider(unsigned n_in, unsigned n_out, double alpha) {
  return Diagram(std::make_shared<const Node>(Node{
      DiagramKind::XSpider, n_in, n_out, reduce_phase(alpha), nullptr,
      nullptr}));
}

double Diagram::phase() const {
  if (!is_spider()) throw ZXError("phase() called on a non-spider diagram");
  return node_->alpha;
}

SpiderColor Diagram::color() const {
  if (!is_spider()) throw ZXError("color() called on a non-spider diagram");
  return node_->kind == DiagramKind::ZSpider ? SpiderColor::Z : SpiderColor::X;
}

Diagram Diagram::first() const {
  if (!is_composite())
    throw ZXError("first() called on a non-composite diagram");
  return Diagram(node_->first);
}

Diagram Diagram::second() const {
  if (!is_composite())
    throw ZXError("second() called on a non-composite diagram");
  return Diagram(node_->second);
}

Diagram compose(const Diagram& a, const Diagram& b) {
  if (a.n_out() != b.n_in()) {
    throw ZXError("compose: boundary mismatch, first has " +
                  std::to_string(a.n_out()) + " outputs but second has " +
                  std::to_string(b.n_in()) + " inputs");
  }
  return Diagram(std::make_shared<const Diagram::Node>(Diagram::Node{
      DiagramKind::Compose, a.n_in(), b.n_out(), 0.0, a.node_, b.node_}));
}

Diagram stack(const Diagram& a, const Diagram& b) {
  return Diagram(std::make_shared<const Diagram::Node>(
      Diagram::Node{DiagramKind::Stack, a.n_in() + b.n_in(),
                    a.n_out() + b.n_out(), 0.0, a.node_, b.node_}));
}

Diagram wire() { return Diagram::z_spider(1, 1, 0.0); }

Diagram n_wire(unsigned n) {
  if (n == 0) return Diagram::empty();
  Diagram d = wire();
  for (unsigned k = 1; k < n; ++k) d = stack(wire(), d);
  return d;
}

Diagram color_swap(const Diagram& d) {
  switch (d.kind()) {
    case DiagramKind::Empty:
    case DiagramKind::Cap:
    case DiagramKind::Cup:
    case DiagramKind::Swap:
      return d;
    case DiagramKind::ZSpider:
      return Diagram::x_spider(d.n_in(), d.n_out(), d.phase());
    case DiagramKind::XSpider:
      return Diagram::z_spider(d.n_in(), d.n_out(), d.phase());
    case DiagramKind::Compose:
      return compose(color_swap(d.first()), color_swap(d.second()));
    case DiagramKind::Stack:
      return stack(color_swap(d.first()), color_swap(d.second()));
  }
  throw ZXError("color_swap: unknown diagram kind");
}

bool structurally_equal(const Diagram& a, const Diagram& b) {
  if (a.kind() != b.kind()) return false;
  if (a.n_in() != b.n_in() || a.n_out() != b.n_out()) return false;
  if (a.is_spider()) return phase_equal(a.phase(), b.phase());
  if (a.is_composite()) {
    return structurally_equal(a.first(), b.first()) &&
           structurally_equal(a.second(), b.second());
  }
  return true;
}

namespace {

std::string phase_repr(double alpha) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", alpha);
  // trim to the shortest form that still round-trips
  for (int prec = 1; prec < 17; ++prec) {
    char probe[40];
    std::snprintf(probe, sizeof(probe), "%.*g", prec, alpha);
    if (std::strtod(probe, nullptr) == alpha) return probe;
  }
  return buf;
}

void write_sexpr(const Diagram& d, std::string& out) {
  switch (d.kind()) {
    case DiagramKind::Empty:
      out += "(empty)";
      return;
    case DiagramKind::Cap:
      out += "(cap)";
      return;
    case DiagramKind::Cup:
      out += "(cup)";
      return;
    case DiagramKind::Swap:
      out += "(swap)";
      return;
    case DiagramKind::ZSpider:
    case DiagramKind::XSpider: {
      if (d.kind() == DiagramKind::ZSpider && d.n_in() == 1 &&
          d.n_out() == 1 && d.phase() == 0.0) {
        out += "(wire)";
        return;
      }
      out += d.kind() == DiagramKind::ZSpider ? "(Z " : "(X ";
      out += std::to_string(d.n_in());
      out += ' ';
      out += std::to_string(d.n_out());
      out += ' ';
      out += phase_repr(d.phase());
      out += ')';
      return;
    }
    case DiagramKind::Compose:
    case DiagramKind::Stack:
      out += d.kind() == DiagramKind::Compose ? "(compose " : "(stack ";
      write_sexpr(d.first(), out);
      out += ' ';
      write_sexpr(d.second(), out);
      out += ')';
      return;
  }
}

class SexprReader {
 public:
  explicit SexprReader(const std::string& text) : text_(text) {}

  Diagram read() {
    Diagram d = read_form();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after diagram");
    return d;
  }

 private:
  Diagram read_form() {
    skip_ws();
    expect('(');
    std::string head = read_atom();
    if (head == "empty") return close(Diagram::empty());
    if (head == "cap") return close(Diagram::cap());
    if (head == "cup") return close(Diagram::cup());
    if (head == "swap") return close(Diagram::swap_wires());
    if (head == "wire") return close(wire());
    if (head == "Z" || head == "X") {
      unsigned in = read_unsigned();
      unsigned out = read_unsigned();
      double alpha = read_double();
      Diagram d = head == "Z" ? Diagram::z_spider(in, out, alpha)
                              : Diagram::x_spider(in, out, alpha);
      return close(d);
    }
    if (head == "compose" || head == "stack") {
      Diagram a = read_form();
      Diagram b = read_form();
      return close(head == "compose" ? compose(a, b) : stack(a, b));
    }
    fail("unknown form '" + head + "'");
  }

  Diagram close(Diagram d) {
    skip_ws();
    expect(')');
    return d;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string read_atom() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected an atom");
    return text_.substr(start, pos_ - start);
  }

  unsigned read_unsigned() {
    std::string a = read_atom();
    try {
      return static_cast<unsigned>(std::stoul(a));
    } catch (const std::exception&) {
      fail("expected a wire count, got '" + a + "'");
    }
  }

  double read_double() {
    std::string a = read_atom();
    char* end = nullptr;
    double v = std::strtod(a.c_str(), &end);
    if (end != a.c_str() + a.size()) fail("expected a phase, got '" + a + "'");
    return v;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ZXError("sexpr: " + message + " at offset " + std::to_string(pos_));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_sexpr(const Diagram& d) {
  std::string out;
  write_sexpr(d, out);
  return out;
}

Diagram parse_sexpr(const std::string& text) {
  return SexprReader(text).read();
}

}  // namespace zx
