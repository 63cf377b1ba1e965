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

#include "zx/rules.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>

#include "zx/gates.hpp"
#include "zx/semantics.hpp"

namespace zx {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* pattern, ...) {
  char buf[160];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

Diagram fold_stack(const Diagram& unit, unsigned n) {
  if (n == 0) return Diagram::empty();
  Diagram d = unit;
  for (unsigned k = 1; k < n; ++k) d = stack(unit, d);
  return d;
}

Diagram h_stack(unsigned n) { return fold_stack(zx_hadamard(), n); }

Diagram z_pi_stack(unsigned n) {
  return fold_stack(Diagram::z_spider(1, 1, kPi), n);
}

Diagram random_spider(Rng& rng, unsigned n_in, unsigned n_out, bool allow_x) {
  double alpha = rng.chance(0.25) ? 0.0 : rng.angle();
  bool x = allow_x && rng.chance(0.5);
  return x ? Diagram::x_spider(n_in, n_out, alpha)
           : Diagram::z_spider(n_in, n_out, alpha);
}

}  // namespace

Diagram random_diagram(Rng& rng, unsigned n_in, unsigned n_out,
                       const DiagramGenOptions& options) {
  auto leaf = [&]() -> Diagram {
    // Collect the leaves admissible at this boundary and pick one.
    std::vector<Diagram> choices;
    choices.push_back(random_spider(rng, n_in, n_out, options.allow_x));
    if (n_in == 2 && n_out == 2 && options.allow_swap)
      choices.push_back(Diagram::swap_wires());
    if (n_in == 0 && n_out == 2) choices.push_back(Diagram::cap());
    if (n_in == 2 && n_out == 0) choices.push_back(Diagram::cup());
    if (n_in == 0 && n_out == 0) choices.push_back(Diagram::empty());
    if (n_in == 1 && n_out == 1) choices.push_back(wire());
    return choices[rng.below(choices.size())];
  };

  if (options.max_depth == 0) return leaf();

  DiagramGenOptions inner = options;
  inner.max_depth = options.max_depth - 1;

  switch (rng.below(3)) {
    case 0:
      return leaf();
    case 1: {
      unsigned mid = static_cast<unsigned>(rng.range(0, 3));
      return compose(random_diagram(rng, n_in, mid, inner),
                     random_diagram(rng, mid, n_out, inner));
    }
    default: {
      unsigned i1 = static_cast<unsigned>(rng.range(0, static_cast<int>(n_in)));
      unsigned o1 =
          static_cast<unsigned>(rng.range(0, static_cast<int>(n_out)));
      return stack(random_diagram(rng, i1, o1, inner),
                   random_diagram(rng, n_in - i1, n_out - o1, inner));
    }
  }
}

RuleReport check_rule(const RewriteRule& rule, std::size_t samples, double tol,
                      std::uint64_t seed) {
  RuleReport report;
  report.rule = rule.name;
  Rng rng(seed ^ fnv1a(rule.name));
  for (std::size_t k = 0; k < samples; ++k) {
    RuleInstance inst = rule.sample(rng);
    PropResult pr = diagrams_proportional(inst.lhs, inst.rhs, tol);
    bool ok = is_proportional(pr);
    if (ok && rule.exact_equality)
      ok = approx_eq(semantics(inst.lhs), semantics(inst.rhs), tol);
    ++report.samples_run;
    if (!ok) {
      report.passed = false;
      report.counterexample = inst.params;
      report.detail = to_line(pr);
      return report;
    }
  }
  report.passed = true;
  return report;
}

RewriteRule color_swapped_rule(const RewriteRule& rule) {
  RewriteRule swapped = rule;
  swapped.name = rule.name + "_color_swapped";
  swapped.sample = [inner = rule.sample](Rng& rng) {
    RuleInstance inst = inner(rng);
    return RuleInstance{inst.params, color_swap(inst.lhs),
                        color_swap(inst.rhs)};
  };
  return swapped;
}

std::vector<RewriteRule> rule_catalog() {
  std::vector<RewriteRule> rules;

  rules.push_back(RewriteRule{
      "stack_compose_distribute",
      "random spiders a:(i1,m1) b:(m1,o1) c:(i2,m2) d:(m2,o2), arities <= 2",
      [](Rng& rng) {
        unsigned i1 = rng.range(0, 2), m1 = rng.range(0, 2),
                 o1 = rng.range(0, 2);
        unsigned i2 = rng.range(0, 2), m2 = rng.range(0, 2),
                 o2 = rng.range(0, 2);
        Diagram a = random_spider(rng, i1, m1, true);
        Diagram b = random_spider(rng, m1, o1, true);
        Diagram c = random_spider(rng, i2, m2, true);
        Diagram d = random_spider(rng, m2, o2, true);
        return RuleInstance{
            fmt("i1=%u m1=%u o1=%u i2=%u m2=%u o2=%u", i1, m1, o1, i2, m2, o2),
            stack(compose(a, b), compose(c, d)),
            compose(stack(a, c), stack(b, d))};
      },
      /*exact_equality=*/true});

  rules.push_back(RewriteRule{
      "bihadamard_color_change",
      "i,o in [0,4], alpha in [0,2pi)",
      [](Rng& rng) {
        unsigned i = rng.range(0, 4), o = rng.range(0, 4);
        double alpha = rng.angle();
        Diagram lhs =
            compose(h_stack(i),
                    compose(Diagram::z_spider(i, o, alpha), h_stack(o)));
        return RuleInstance{fmt("i=%u o=%u alpha=%.6f", i, o, alpha), lhs,
                            Diagram::x_spider(i, o, alpha)};
      }});

  rules.push_back(RewriteRule{
      "color_swap_theorem",
      "random diagrams, boundaries <= 4, depth <= 4",
      [](Rng& rng) {
        unsigned i = rng.range(0, 4), o = rng.range(0, 4);
        Diagram d = random_diagram(rng, i, o);
        Diagram lhs = compose(h_stack(i), compose(d, h_stack(o)));
        return RuleInstance{fmt("i=%u o=%u zx=%s", i, o, to_sexpr(d).c_str()),
                            lhs, color_swap(d)};
      }});

  rules.push_back(RewriteRule{
      "bialgebra",
      "fixed 2-in/2-out instance",
      [](Rng&) {
        Diagram copies = stack(Diagram::x_spider(1, 2, 0.0),
                               Diagram::x_spider(1, 2, 0.0));
        Diagram mid = stack(wire(), stack(Diagram::swap_wires(), wire()));
        Diagram adds = stack(Diagram::z_spider(2, 1, 0.0),
                             Diagram::z_spider(2, 1, 0.0));
        Diagram rhs = compose(Diagram::z_spider(2, 1, 0.0),
                              Diagram::x_spider(1, 2, 0.0));
        return RuleInstance{"-", compose(copies, compose(mid, adds)), rhs};
      }});

  rules.push_back(RewriteRule{
      "hopf",
      "fixed instance",
      [](Rng&) {
        Diagram lhs = compose(Diagram::z_spider(1, 2, 0.0),
                              Diagram::x_spider(2, 1, 0.0));
        Diagram rhs = compose(Diagram::z_spider(1, 0, 0.0),
                              Diagram::x_spider(0, 1, 0.0));
        return RuleInstance{"-", lhs, rhs};
      }});

  rules.push_back(RewriteRule{
      "bi_pi",
      "i,o in [0,3], alpha in [0,2pi)",
      [](Rng& rng) {
        unsigned i = rng.range(0, 3), o = rng.range(0, 3);
        double alpha = rng.angle();
        Diagram lhs =
            compose(z_pi_stack(i),
                    compose(Diagram::x_spider(i, o, -alpha), z_pi_stack(o)));
        return RuleInstance{fmt("i=%u o=%u alpha=%.6f", i, o, alpha), lhs,
                            Diagram::x_spider(i, o, alpha)};
      }});

  rules.push_back(RewriteRule{
      "pi_copy",
      "o in [0,3]",
      [](Rng& rng) {
        unsigned o = rng.range(0, 3);
        Diagram x = Diagram::x_spider(1, o, 0.0);
        Diagram lhs = compose(Diagram::z_spider(1, 1, kPi), x);
        Diagram rhs = compose(x, z_pi_stack(o));
        return RuleInstance{fmt("o=%u", o), lhs, rhs};
      }});

  rules.push_back(RewriteRule{
      "fusion_1_1",
      "i,o in [0,3], alpha,beta in [0,2pi)",
      [](Rng& rng) {
        unsigned i = rng.range(0, 3), o = rng.range(0, 3);
        double alpha = rng.angle(), beta = rng.angle();
        Diagram lhs = compose(Diagram::z_spider(i, 1, alpha),
                              Diagram::z_spider(1, o, beta));
        return RuleInstance{
            fmt("i=%u o=%u alpha=%.6f beta=%.6f", i, o, alpha, beta), lhs,
            Diagram::z_spider(i, o, alpha + beta)};
      }});

  rules.push_back(RewriteRule{
      "phase_gadget_split",
      "i,o in [0,3], alpha in [0,2pi)",
      [](Rng& rng) {
        unsigned i = rng.range(0, 3), o = rng.range(0, 3);
        double alpha = rng.angle();
        Diagram gadget = compose(Diagram::x_spider(1, 1, 0.0),
                                 Diagram::z_spider(1, 0, alpha));
        Diagram rhs = compose(Diagram::z_spider(i, o + 1, 0.0),
                              stack(n_wire(o), gadget));
        return RuleInstance{fmt("i=%u o=%u alpha=%.6f", i, o, alpha),
                            Diagram::z_spider(i, o, alpha), rhs};
      }});

  rules.push_back(RewriteRule{
      "swap_via_3_cnots",
      "fixed instance",
      [](Rng&) {
        return RuleInstance{"-", swap_via_3_cnots(), Diagram::swap_wires()};
      }});

  return rules;
}

std::vector<RewriteRule> rule_mutants() {
  std::vector<RewriteRule> mutants;

  mutants.push_back(RewriteRule{
      "stack_compose_distribute_mutant",
      "fixed spiders, one rhs phase perturbed",
      [](Rng&) {
        Diagram a = Diagram::z_spider(1, 1, 0.3), b = Diagram::z_spider(1, 1, 0.5);
        Diagram c = Diagram::x_spider(1, 1, 0.7), d = Diagram::x_spider(1, 1, 0.9);
        Diagram d2 = Diagram::x_spider(1, 1, 1.0);
        return RuleInstance{"-", stack(compose(a, b), compose(c, d)),
                            compose(stack(a, c), stack(b, d2))};
      }});

  mutants.push_back(RewriteRule{
      "bihadamard_color_change_mutant",
      "i=o=1, rhs angle perturbed",
      [](Rng&) {
        double alpha = kPi / 5;
        Diagram lhs =
            compose(h_stack(1),
                    compose(Diagram::z_spider(1, 1, alpha), h_stack(1)));
        return RuleInstance{"-", lhs, Diagram::x_spider(1, 1, alpha + 0.1)};
      }});

  mutants.push_back(RewriteRule{
      "color_swap_theorem_mutant",
      "color swap dropped on rhs",
      [](Rng&) {
        Diagram d = Diagram::z_spider(1, 2, kPi / 3);
        Diagram lhs = compose(h_stack(1), compose(d, h_stack(2)));
        return RuleInstance{"-", lhs, d};
      }});

  mutants.push_back(RewriteRule{
      "bialgebra_mutant",
      "rhs Z spider carries phase pi",
      [](Rng&) {
        Diagram copies = stack(Diagram::x_spider(1, 2, 0.0),
                               Diagram::x_spider(1, 2, 0.0));
        Diagram mid = stack(wire(), stack(Diagram::swap_wires(), wire()));
        Diagram adds = stack(Diagram::z_spider(2, 1, 0.0),
                             Diagram::z_spider(2, 1, 0.0));
        Diagram rhs = compose(Diagram::z_spider(2, 1, kPi),
                              Diagram::x_spider(1, 2, 0.0));
        return RuleInstance{"-", compose(copies, compose(mid, adds)), rhs};
      }});

  mutants.push_back(RewriteRule{
      "hopf_mutant",
      "rhs replaced by the plain wire",
      [](Rng&) {
        Diagram lhs = compose(Diagram::z_spider(1, 2, 0.0),
                              Diagram::x_spider(2, 1, 0.0));
        return RuleInstance{"-", lhs, wire()};
      }});

  mutants.push_back(RewriteRule{
      "bi_pi_mutant",
      "inner phase sign flipped",
      [](Rng&) {
        double alpha = kPi / 3;
        Diagram lhs =
            compose(z_pi_stack(1),
                    compose(Diagram::x_spider(1, 1, alpha), z_pi_stack(1)));
        return RuleInstance{"-", lhs, Diagram::x_spider(1, 1, alpha)};
      }});

  mutants.push_back(RewriteRule{
      "pi_copy_mutant",
      "rhs missing the pi stack",
      [](Rng&) {
        Diagram x = Diagram::x_spider(1, 2, 0.0);
        Diagram lhs = compose(Diagram::z_spider(1, 1, kPi), x);
        return RuleInstance{"-", lhs, x};
      }});

  mutants.push_back(RewriteRule{
      "fusion_1_1_mutant",
      "rhs angle perturbed",
      [](Rng&) {
        double alpha = 0.4, beta = 0.9;
        Diagram lhs = compose(Diagram::z_spider(2, 1, alpha),
                              Diagram::z_spider(1, 1, beta));
        return RuleInstance{"-", lhs,
                            Diagram::z_spider(2, 1, alpha + beta + 0.1)};
      }});

  mutants.push_back(RewriteRule{
      "phase_gadget_split_mutant",
      "gadget phase perturbed",
      [](Rng&) {
        double alpha = kPi / 3;
        Diagram gadget = compose(Diagram::x_spider(1, 1, 0.0),
                                 Diagram::z_spider(1, 0, alpha + 0.2));
        Diagram rhs = compose(Diagram::z_spider(1, 2, 0.0),
                              stack(n_wire(1), gadget));
        return RuleInstance{"-", Diagram::z_spider(1, 1, alpha), rhs};
      }});

  mutants.push_back(RewriteRule{
      "swap_via_3_cnots_mutant",
      "rhs replaced by parallel wires",
      [](Rng&) {
        return RuleInstance{"-", swap_via_3_cnots(), n_wire(2)};
      }});

  return mutants;
}

}  // namespace zx
