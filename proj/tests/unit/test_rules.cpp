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

#include "zx/rules.hpp"

using namespace zx;

namespace {
constexpr double kPi = std::numbers::pi;

const RewriteRule& find_rule(const std::vector<RewriteRule>& rules,
                             const std::string& name) {
  for (const RewriteRule& r : rules)
    if (r.name == name) return r;
  REQUIRE_MESSAGE(false, "rule not found: ", name);
  throw std::logic_error("unreachable");
}
}  // namespace

TEST_CASE("catalog holds the ten rules") {
  std::vector<RewriteRule> rules = rule_catalog();
  CHECK(rules.size() == 10);
  for (const char* name :
       {"stack_compose_distribute", "bihadamard_color_change",
        "color_swap_theorem", "bialgebra", "hopf", "bi_pi", "pi_copy",
        "fusion_1_1", "phase_gadget_split", "swap_via_3_cnots"}) {
    CHECK_NOTHROW(find_rule(rules, name));
  }
}

TEST_CASE("every catalog rule passes") {
  for (const RewriteRule& rule : rule_catalog()) {
    RuleReport report = check_rule(rule, 100, 1e-8, 42);
    CHECK_MESSAGE(report.passed, rule.name, " failed at ",
                  report.counterexample, ": ", report.detail);
    CHECK(report.samples_run == 100);
  }
}

TEST_CASE("fusion examples") {
  std::vector<RewriteRule> rules = rule_catalog();
  CHECK(check_rule(find_rule(rules, "fusion_1_1"), 100, 1e-9, 42).passed);

  // Angles wrap modulo 2pi: composing pi with pi fuses to phase 0.
  Diagram two_pis =
      compose(Diagram::z_spider(1, 1, kPi), Diagram::z_spider(1, 1, kPi));
  CHECK(is_proportional(
      diagrams_proportional(two_pis, Diagram::z_spider(1, 1, 0.0))));
}

TEST_CASE("hopf single draw") {
  std::vector<RewriteRule> rules = rule_catalog();
  CHECK(check_rule(find_rule(rules, "hopf"), 1, 1e-9, 0).passed);
}

TEST_CASE("every registered mutant fails") {
  std::vector<RewriteRule> mutants = rule_mutants();
  CHECK(mutants.size() == 10);
  for (const RewriteRule& mutant : mutants) {
    RuleReport report = check_rule(mutant, 20, 1e-8, 42);
    CHECK_MESSAGE(!report.passed, mutant.name, " unexpectedly passed");
    CHECK(!report.detail.empty());
  }
}

TEST_CASE("color-swapped catalog passes") {
  for (const RewriteRule& rule : rule_catalog()) {
    RuleReport report = check_rule(color_swapped_rule(rule), 50, 1e-8, 42);
    CHECK_MESSAGE(report.passed, report.rule, " failed at ",
                  report.counterexample, ": ", report.detail);
  }
}

TEST_CASE("reports are deterministic for a fixed seed") {
  std::vector<RewriteRule> rules = rule_catalog();
  const RewriteRule& rule = find_rule(rules, "color_swap_theorem");
  RuleReport a = check_rule(rule, 30, 1e-8, 7);
  RuleReport b = check_rule(rule, 30, 1e-8, 7);
  CHECK(a.passed == b.passed);
  CHECK(a.samples_run == b.samples_run);
  CHECK(a.counterexample == b.counterexample);
}

TEST_CASE("random diagram generator honors its contract") {
  Rng rng(51);
  for (int k = 0; k < 60; ++k) {
    unsigned i = rng.range(0, 4), o = rng.range(0, 4);
    DiagramGenOptions opts;
    opts.allow_swap = (k % 2 == 0);
    opts.allow_x = (k % 3 != 0);
    Diagram d = random_diagram(rng, i, o, opts);
    CHECK(d.n_in() == i);
    CHECK(d.n_out() == o);
    // Walk the tree checking the leaf restrictions.
    std::vector<Diagram> todo{d};
    while (!todo.empty()) {
      Diagram cur = todo.back();
      todo.pop_back();
      if (cur.is_composite()) {
        todo.push_back(cur.first());
        todo.push_back(cur.second());
        continue;
      }
      if (!opts.allow_swap) CHECK(cur.kind() != DiagramKind::Swap);
      if (!opts.allow_x) CHECK(cur.kind() != DiagramKind::XSpider);
    }
  }
}
