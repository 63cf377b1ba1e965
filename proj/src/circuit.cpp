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

#include "zx/circuit.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "zx/gates.hpp"

namespace zx {

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------
// QASM subset parser
// ---------------------------------------------------------------------

enum class TokKind {
  Ident,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Plus,
  Minus,
  Star,
  Slash,
  End,
};

struct Token {
  TokKind kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    SourceSpan span{line_, col_};
    if (pos_ >= text_.size()) return {TokKind::End, "", span};
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        advance();
      return {TokKind::Ident, std::string(text_.substr(start, pos_ - start)),
              span};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      bool saw_digit = false;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        saw_digit = true;
        advance();
      }
      if (pos_ < text_.size() && text_[pos_] == '.') {
        advance();
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          saw_digit = true;
          advance();
        }
      }
      if (!saw_digit) throw ParseError(span, "malformed number");
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        advance();
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
          advance();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw ParseError(span, "malformed exponent");
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          advance();
      }
      return {TokKind::Number, std::string(text_.substr(start, pos_ - start)),
              span};
    }
    advance();
    switch (c) {
      case '(': return {TokKind::LParen, "(", span};
      case ')': return {TokKind::RParen, ")", span};
      case '[': return {TokKind::LBracket, "[", span};
      case ']': return {TokKind::RBracket, "]", span};
      case ',': return {TokKind::Comma, ",", span};
      case ';': return {TokKind::Semi, ";", span};
      case '+': return {TokKind::Plus, "+", span};
      case '-': return {TokKind::Minus, "-", span};
      case '*': return {TokKind::Star, "*", span};
      case '/': return {TokKind::Slash, "/", span};
      default:
        throw ParseError(span, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class QasmParser {
 public:
  explicit QasmParser(std::string_view text) : lexer_(text) {
    shift();
  }

  Circuit parse() {
    if (cur_.kind == TokKind::Ident && cur_.text == "OPENQASM") {
      shift();
      Token version = expect(TokKind::Number, "version number");
      if (version.text != "2.0")
        throw ParseError(version.span,
                         "unsupported OPENQASM version '" + version.text +
                             "' (only 2.0 is accepted)");
      expect(TokKind::Semi, "';'");
    }
    while (cur_.kind != TokKind::End) statement();
    if (!has_qreg_)
      throw ParseError(cur_.span, "no quantum register declared");
    return circuit_;
  }

 private:
  void statement() {
    Token head = expect(TokKind::Ident, "a statement");
    if (head.text == "qreg") {
      qreg(head);
      return;
    }
    if (!has_qreg_)
      throw ParseError(head.span,
                       "gate before qreg: no quantum register declared");
    if (head.text == "rx" || head.text == "ry" || head.text == "rz") {
      expect(TokKind::LParen, "'('");
      double theta = expression();
      expect(TokKind::RParen, "')'");
      unsigned t = operand();
      expect(TokKind::Semi, "';'");
      if (head.text == "rx") circuit_.gates.push_back(Gate::rx(theta, t));
      else if (head.text == "ry") circuit_.gates.push_back(Gate::ry(theta, t));
      else circuit_.gates.push_back(Gate::rz(theta, t));
      return;
    }
    if (head.text == "h" || head.text == "x" || head.text == "z") {
      unsigned t = operand();
      expect(TokKind::Semi, "';'");
      if (head.text == "h") circuit_.gates.push_back(Gate::h(t));
      else if (head.text == "x") circuit_.gates.push_back(Gate::x(t));
      else circuit_.gates.push_back(Gate::z(t));
      return;
    }
    if (head.text == "cx") {
      unsigned c = operand();
      expect(TokKind::Comma, "','");
      Token target_tok = cur_;
      unsigned t = operand();
      expect(TokKind::Semi, "';'");
      if (c == t)
        throw ParseError(target_tok.span, "cx: control equals target");
      circuit_.gates.push_back(Gate::cnot(c, t));
      return;
    }
    throw ParseError(head.span, "unknown statement '" + head.text + "'");
  }

  void qreg(const Token& head) {
    if (has_qreg_) throw ParseError(head.span, "duplicate qreg declaration");
    Token name = expect(TokKind::Ident, "register name");
    expect(TokKind::LBracket, "'['");
    Token size = expect(TokKind::Number, "register size");
    unsigned n = to_index(size);
    expect(TokKind::RBracket, "']'");
    expect(TokKind::Semi, "';'");
    if (n == 0) throw ParseError(size.span, "register size must be positive");
    has_qreg_ = true;
    register_name_ = name.text;
    circuit_.qubits = n;
  }

  unsigned operand() {
    Token name = expect(TokKind::Ident, "register name");
    if (name.text != register_name_)
      throw ParseError(name.span, "unknown register '" + name.text + "'");
    expect(TokKind::LBracket, "'['");
    Token idx = expect(TokKind::Number, "qubit index");
    unsigned i = to_index(idx);
    expect(TokKind::RBracket, "']'");
    if (i >= circuit_.qubits)
      throw ParseError(idx.span, "qubit index " + idx.text +
                                     " out of range for register of size " +
                                     std::to_string(circuit_.qubits));
    return i;
  }

  unsigned to_index(const Token& tok) {
    for (char c : tok.text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(tok.span, "expected a non-negative integer, got '" +
                                       tok.text + "'");
    unsigned long v = std::strtoul(tok.text.c_str(), nullptr, 10);
    if (v > 1u << 20)
      throw ParseError(tok.span, "integer too large: " + tok.text);
    return static_cast<unsigned>(v);
  }

  // expr := term ((+|-) term)*
  double expression() {
    double v = term();
    while (cur_.kind == TokKind::Plus || cur_.kind == TokKind::Minus) {
      bool plus = cur_.kind == TokKind::Plus;
      shift();
      double rhs = term();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  // term := unary ((*|/) unary)*
  double term() {
    double v = unary();
    while (cur_.kind == TokKind::Star || cur_.kind == TokKind::Slash) {
      bool mul = cur_.kind == TokKind::Star;
      Token op = cur_;
      shift();
      double rhs = unary();
      if (!mul && rhs == 0.0)
        throw ParseError(op.span, "division by zero in constant expression");
      v = mul ? v * rhs : v / rhs;
    }
    return v;
  }

  double unary() {
    if (cur_.kind == TokKind::Minus) {
      shift();
      return -unary();
    }
    if (cur_.kind == TokKind::Plus) {
      shift();
      return unary();
    }
    return primary();
  }

  double primary() {
    if (cur_.kind == TokKind::Number) {
      double v = std::strtod(cur_.text.c_str(), nullptr);
      shift();
      return v;
    }
    if (cur_.kind == TokKind::Ident && cur_.text == "pi") {
      shift();
      return kPi;
    }
    if (cur_.kind == TokKind::LParen) {
      shift();
      double v = expression();
      expect(TokKind::RParen, "')'");
      return v;
    }
    throw ParseError(cur_.span,
                     "expected a number, 'pi' or '(' in expression");
  }

  Token expect(TokKind kind, const std::string& what) {
    if (cur_.kind != kind)
      throw ParseError(cur_.span, "expected " + what + ", got '" +
                                      (cur_.kind == TokKind::End ? "<end>"
                                                                 : cur_.text) +
                                      "'");
    Token t = cur_;
    shift();
    return t;
  }

  void shift() { cur_ = lexer_.next(); }

  Lexer lexer_;
  Token cur_;
  Circuit circuit_;
  bool has_qreg_ = false;
  std::string register_name_;
};

std::string double_repr(double v) {
  char best[40];
  std::snprintf(best, sizeof(best), "%.17g", v);
  for (int prec = 1; prec < 17; ++prec) {
    char probe[40];
    std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
    if (std::strtod(probe, nullptr) == v) return probe;
  }
  return best;
}

/** Stacks wires above and below a diagram, omitting empty padding. */
Diagram pad(const Diagram& d, unsigned above, unsigned below) {
  Diagram out = d;
  if (above) out = stack(n_wire(above), out);
  if (below) out = stack(out, n_wire(below));
  return out;
}

Diagram adjacent_swap_at(unsigned row, unsigned n) {
  return pad(Diagram::swap_wires(), row, n - row - 2);
}

}  // namespace

Circuit parse_qasm(std::string_view text) { return QasmParser(text).parse(); }

std::string print_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\nqreg q[" + std::to_string(c.qubits) +
                    "];\n";
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Rx:
      case GateKind::Ry:
      case GateKind::Rz: {
        const char* name = g.kind == GateKind::Rx   ? "rx"
                           : g.kind == GateKind::Ry ? "ry"
                                                    : "rz";
        out += std::string(name) + "(" + double_repr(g.theta) + ") q[" +
               std::to_string(g.target) + "];\n";
        break;
      }
      case GateKind::H:
        out += "h q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::X:
        out += "x q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::Z:
        out += "z q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::Cnot:
        out += "cx q[" + std::to_string(g.control) + "], q[" +
               std::to_string(g.target) + "];\n";
        break;
    }
  }
  return out;
}

Diagram shift_top_to(unsigned n) {
  if (n == 0) throw ZXError("shift_top_to: need at least one wire");
  if (n == 1) return n_wire(1);
  Diagram d = adjacent_swap_at(0, n);
  for (unsigned k = 1; k + 1 < n; ++k) d = compose(d, adjacent_swap_at(k, n));
  return d;
}

Diagram shift_to_top(unsigned n) {
  if (n == 0) throw ZXError("shift_to_top: need at least one wire");
  if (n == 1) return n_wire(1);
  Diagram d = adjacent_swap_at(n - 2, n);
  for (int k = static_cast<int>(n) - 3; k >= 0; --k)
    d = compose(d, adjacent_swap_at(static_cast<unsigned>(k), n));
  return d;
}

Diagram arbitrary_swap(unsigned q, unsigned i, unsigned j) {
  if (i == j) throw ZXError("arbitrary_swap: wires must differ");
  if (i >= q || j >= q) throw ZXError("arbitrary_swap: wire index out of range");
  unsigned lo = std::min(i, j), hi = std::max(i, j);
  unsigned w = hi - lo + 1;
  // Shift the top of the window to the bottom, then pull what is now the
  // top w-1 block's bottom wire back up: a transposition of lo and hi.
  Diagram window = compose(shift_top_to(w), pad(shift_to_top(w - 1), 0, 1));
  return pad(window, lo, q - hi - 1);
}

Diagram lower_gate(const Gate& g, unsigned q) {
  if (g.target >= q) throw ZXError("lower_gate: target out of range");
  if (g.kind == GateKind::Cnot) {
    if (g.control >= q) throw ZXError("lower_gate: control out of range");
    if (g.control == g.target)
      throw ZXError("lower_gate: control equals target");
    unsigned c = g.control, t = g.target;
    if (c < t) {
      Diagram base = pad(zx_cnot_adjacent(), c, q - c - 2);
      if (t == c + 1) return base;
      Diagram s = arbitrary_swap(q, c + 1, t);
      return compose(s, compose(base, s));
    }
    Diagram base = pad(zx_cnot_adjacent_reversed(), t, q - t - 2);
    if (c == t + 1) return base;
    Diagram s = arbitrary_swap(q, t + 1, c);
    return compose(s, compose(base, s));
  }

  Diagram one_wire = [&] {
    switch (g.kind) {
      case GateKind::Rx: return zx_rx(g.theta);
      case GateKind::Ry: return zx_ry(g.theta);
      case GateKind::Rz: return zx_rz(g.theta);
      case GateKind::H: return zx_hadamard();
      case GateKind::X: return zx_rx(kPi);
      case GateKind::Z: return zx_rz(kPi);
      default: throw ZXError("lower_gate: unknown gate kind");
    }
  }();
  return pad(one_wire, g.target, q - g.target - 1);
}

Diagram lower_circuit(const Circuit& c) {
  if (c.gates.empty()) return n_wire(c.qubits);
  Diagram d = lower_gate(c.gates.front(), c.qubits);
  for (std::size_t k = 1; k < c.gates.size(); ++k)
    d = compose(d, lower_gate(c.gates[k], c.qubits));
  return d;
}

CMatrix oracle_unitary(const Circuit& c, unsigned max_qubits) {
  if (c.qubits > max_qubits)
    throw EvalLimitError("oracle_unitary: circuit has " +
                         std::to_string(c.qubits) +
                         " qubits, above the limit of " +
                         std::to_string(max_qubits));
  const unsigned q = c.qubits;
  const std::size_t dim = std::size_t{1} << q;
  CMatrix u = CMatrix::identity(dim);

  auto embed_single = [&](const CMatrix& m, unsigned target) {
    CMatrix out = CMatrix::identity(std::size_t{1} << target);
    out = kron(out, m);
    out = kron(out, CMatrix::identity(std::size_t{1} << (q - target - 1)));
    return out;
  };

  for (const Gate& g : c.gates) {
    CMatrix step = CMatrix::identity(1);
    switch (g.kind) {
      case GateKind::Rx: step = embed_single(oracle_rx(g.theta), g.target); break;
      case GateKind::Ry: step = embed_single(oracle_ry(g.theta), g.target); break;
      case GateKind::Rz: step = embed_single(oracle_rz(g.theta), g.target); break;
      case GateKind::H: step = embed_single(oracle_h(), g.target); break;
      case GateKind::X: step = embed_single(oracle_x(), g.target); break;
      case GateKind::Z: step = embed_single(oracle_z(), g.target); break;
      case GateKind::Cnot: {
        if (g.control >= q || g.target >= q || g.control == g.target)
          throw ZXError("oracle_unitary: invalid cnot operands");
        step = CMatrix(dim, dim);
        const std::size_t cbit = std::size_t{1} << (q - 1 - g.control);
        const std::size_t tbit = std::size_t{1} << (q - 1 - g.target);
        for (std::size_t b = 0; b < dim; ++b) {
          std::size_t to = (b & cbit) ? (b ^ tbit) : b;
          step(to, b) = 1.0;
        }
        break;
      }
    }
    u = matmul(step, u);
  }
  return u;
}

}  // namespace zx
