// Copyright 2026 The morphplan Authors
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

// Multi-stage improvement planning. Each stage turns its operation groups
// into a knapsack instance, solves it, and applies the chosen operations; the
// resulting configuration is the input of the next stage.

#ifndef MORPHPLAN_PLANNER_HPP
#define MORPHPLAN_PLANNER_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "morphplan/changeops.hpp"
#include "morphplan/decimal.hpp"
#include "morphplan/errors.hpp"
#include "morphplan/mckp.hpp"
#include "morphplan/morphology.hpp"

namespace morphplan {

struct StagePlan {
  std::string stage_id;
  std::vector<OperationGroup> groups;
  Tenths budget;
  Comparator comparator = Comparator::kInclusive;
  SolverKind solver = SolverKind::kDp;
  /// Id given to the resulting configuration; derived when empty.
  std::string result_id;

  friend bool operator==(const StagePlan&, const StagePlan&) = default;
};

struct StageResult {
  StagePlan plan;
  Configuration input;
  MckpInstance instance;
  MckpSolution solution;
  std::vector<GreedyStep> greedy_trace;  // empty unless solved greedily
  std::vector<ChangeOperation> selected_operations;
  Configuration resulting_configuration;

  const std::string& stage_id() const { return plan.stage_id; }

  friend bool operator==(const StageResult&, const StageResult&) = default;
};

struct StageFailure {
  std::string stage_id;
  std::string message;
  std::string kind;  // validation | precondition | solver | schema

  friend bool operator==(const StageFailure&, const StageFailure&) = default;
};

struct Strategy {
  Configuration initial;
  std::vector<StageResult> stages;
  Configuration final_configuration;
  std::optional<StageFailure> failure;

  bool ok() const { return !failure.has_value(); }

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// Checks that every non-None operation is authored against `input`.
inline Findings check_applicability(const StagePlan& plan,
                                    const Configuration& input) {
  Findings out;
  for (const auto& group : plan.groups) {
    for (const auto& op : group.members) {
      if (op.is_none()) continue;
      const std::string* held = input.at(op.leaf);
      if (held == nullptr)
        out.push_back("operation " + op.id + " targets leaf " + op.leaf +
                      ", unassigned in " + input.id);
      else if (*held != op.from_alt)
        out.push_back("operation " + op.id + " expects " + op.from_alt +
                      " at leaf " + op.leaf + ", " + input.id + " holds " +
                      *held);
    }
  }
  return out;
}

inline StageResult plan_stage(const ComponentTree& tree,
                              const Configuration& input,
                              const StagePlan& plan) {
  const std::string where = "stage " + plan.stage_id + ": ";
  if (Findings f = validate_configuration(tree, input); !f.empty())
    throw ValidationError(where + "invalid input configuration: " +
                              join_findings(f),
                          f);
  Findings groups_findings;
  for (const auto& group : plan.groups)
    for (auto& f : validate_group(tree, group))
      groups_findings.push_back(std::move(f));
  if (!groups_findings.empty())
    throw ValidationError(where + join_findings(groups_findings),
                          groups_findings);
  if (Findings f = check_applicability(plan, input); !f.empty())
    throw PreconditionError(where + "operation/configuration mismatch: " +
                            join_findings(f));

  StageResult result;
  result.plan = plan;
  result.input = input;
  result.instance = build_mckp_instance(plan.groups, plan.budget,
                                        plan.comparator);
  if (plan.solver == SolverKind::kGreedy) {
    GreedyResult greedy = solve_greedy_traced(result.instance);
    result.solution = std::move(greedy.solution);
    result.greedy_trace = std::move(greedy.trace);
  } else {
    result.solution = solve(result.instance, plan.solver);
  }
  if (Findings f = verify_solution(result.instance, result.solution);
      !f.empty())
    throw SolverError(where + "solver returned an invalid solution: " +
                      join_findings(f));

  result.selected_operations = selected_operations(plan.groups,
                                                   result.solution);
  Configuration current = input;
  for (const auto& op : result.selected_operations)
    current = apply_operation(current, op);
  current.id = plan.result_id.empty() ? input.id + "+" + plan.stage_id
                                      : plan.result_id;
  result.resulting_configuration = std::move(current);
  return result;
}

/// Runs the stages in order. Stops at the first failing stage, keeping the
/// results computed so far and the failure message.
inline Strategy plan_chain(const ComponentTree& tree,
                           const Configuration& initial,
                           std::span<const StagePlan> stages) {
  Strategy strategy;
  strategy.initial = initial;
  strategy.final_configuration = initial;
  if (Findings f = validate_configuration(tree, initial); !f.empty()) {
    strategy.failure = StageFailure{
        "", "invalid initial configuration: " + join_findings(f), "validation"};
    return strategy;
  }
  for (const auto& stage : stages) {
    try {
      StageResult r = plan_stage(tree, strategy.final_configuration, stage);
      strategy.final_configuration = r.resulting_configuration;
      strategy.stages.push_back(std::move(r));
    } catch (const SolverError& e) {
      strategy.failure = StageFailure{stage.stage_id, e.what(), "solver"};
    } catch (const PreconditionError& e) {
      strategy.failure = StageFailure{stage.stage_id, e.what(), "precondition"};
    } catch (const SchemaError& e) {
      strategy.failure = StageFailure{stage.stage_id, e.what(), "schema"};
    } catch (const Error& e) {
      strategy.failure = StageFailure{stage.stage_id, e.what(), "validation"};
    }
    if (strategy.failure) break;
  }
  return strategy;
}

/// "S5G => S5G_adv1 => S5G_adv2"
inline std::string chain_string(const Strategy& strategy) {
  std::string out = strategy.initial.id;
  for (const auto& stage : strategy.stages)
    out += " => " + stage.resulting_configuration.id;
  return out;
}

}  // namespace morphplan

#endif  // MORPHPLAN_PLANNER_HPP
