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

#ifndef ZXCHECK_RULES_HPP
#define ZXCHECK_RULES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zx/diagram.hpp"
#include "zx/propcheck.hpp"
#include "zx/rng.hpp"

namespace zx {

/** One sampled instance of a rule: both sides plus a printable parameter tag. */
struct RuleInstance {
  std::string params;
  Diagram lhs;
  Diagram rhs;
};

/**
 * A rewrite rule packaged as a sampler over its parameter space. Each draw
 * yields a well-typed lhs/rhs pair with equal boundaries; the checker
 * certifies lhs proportional to rhs on every draw.
 */
struct RewriteRule {
  std::string name;
  std::string param_space;
  std::function<RuleInstance(Rng&)> sample;
  /** When set, the sides must also be entrywise equal (witness exactly 1). */
  bool exact_equality = false;
};

struct RuleReport {
  std::string rule;
  bool passed = false;
  std::size_t samples_run = 0;
  std::string counterexample;  // params of the first failing draw
  std::string detail;          // proportionality report for that draw
};

/**
 * Draws `samples` instances (seeded by seed ^ fnv1a(rule.name), so reports
 * do not depend on catalog order) and checks each for proportionality.
 * Stops at the first failure.
 */
RuleReport check_rule(const RewriteRule& rule, std::size_t samples, double tol,
                      std::uint64_t seed);

/** The verified rule catalog. */
std::vector<RewriteRule> rule_catalog();

/**
 * Deliberately broken variants (a perturbed angle or a dropped color swap
 * on one side). Every mutant must fail check_rule; they guard the harness
 * against vacuous passes.
 */
std::vector<RewriteRule> rule_mutants();

/** The same rule with color_swap applied to both sides of every draw. */
RewriteRule color_swapped_rule(const RewriteRule& rule);

/**
 * Seeded generator for well-typed diagrams with the exact given boundary
 * sizes. Recursion depth, spider arities (<= 3) and leaf choices are drawn
 * from rng; phases are uniform in [0, 2*pi).
 */
struct DiagramGenOptions {
  unsigned max_depth = 4;
  bool allow_swap = true;
  bool allow_x = true;
};

Diagram random_diagram(Rng& rng, unsigned n_in, unsigned n_out,
                       const DiagramGenOptions& options = {});

}  // namespace zx

#endif  // ZXCHECK_RULES_HPP
