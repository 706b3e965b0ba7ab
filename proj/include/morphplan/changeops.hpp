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

#ifndef MORPHPLAN_CHANGEOPS_HPP
#define MORPHPLAN_CHANGEOPS_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphplan/decimal.hpp"
#include "morphplan/errors.hpp"
#include "morphplan/mckp.hpp"
#include "morphplan/morphology.hpp"

namespace morphplan {

/// Severity of a change, from local modification up to radical change.
enum class ImpactClass {
  kLocalNode,
  kLocalArchitecture,
  kComponent,
  kArchNodeFunctions,
  kArchTopology,
  kArchExtension,
  kRadical,
};

struct ImpactClassInfo {
  ImpactClass value;
  std::string_view name;
  std::string_view description;
};

inline constexpr std::array<ImpactClassInfo, 7> kImpactClasses = {{
    {ImpactClass::kLocalNode, "local-node",
     "local evolution or modification at the node level"},
    {ImpactClass::kLocalArchitecture, "local-architecture",
     "local evolution or modification at the architectural level"},
    {ImpactClass::kComponent, "component",
     "disruptive change in the design of a class of network nodes"},
    {ImpactClass::kArchNodeFunctions, "arch-node-functions",
     "architectural change of nodes or node functions"},
    {ImpactClass::kArchTopology, "arch-topology",
     "architectural change of the system topology"},
    {ImpactClass::kArchExtension, "arch-extension",
     "architectural extension: addition of a new system part"},
    {ImpactClass::kRadical, "radical",
     "disruptive change at both node and architecture levels"},
}};

inline std::string_view to_string(ImpactClass c) {
  for (const auto& info : kImpactClasses)
    if (info.value == c) return info.name;
  return "unknown";
}

inline std::optional<ImpactClass> parse_impact_class(std::string_view name) {
  for (const auto& info : kImpactClasses)
    if (info.name == name) return info.value;
  return std::nullopt;
}

/// A typed edit "leaf: from -> to". An operation without a target is the
/// group's "do nothing" marker.
struct ChangeOperation {
  std::string id;
  int group = 0;
  std::string leaf;
  std::string from_alt;
  std::optional<std::string> to_alt;
  Tenths profit;
  Tenths cost;
  std::optional<ImpactClass> impact_class;
  std::vector<std::string> activity_refs;

  bool is_none() const { return !to_alt.has_value(); }

  friend bool operator==(const ChangeOperation&,
                         const ChangeOperation&) = default;
};

inline std::string describe(const ChangeOperation& op) {
  if (op.is_none()) return op.id + ": None";
  return op.id + ": " + op.from_alt + " -> " + *op.to_alt;
}

/// Alternatives for one component. The first member is the None-marker.
struct OperationGroup {
  int index = 0;
  std::string leaf;
  std::vector<ChangeOperation> members;

  friend bool operator==(const OperationGroup&, const OperationGroup&) = default;
};

inline Findings validate_operation(const ComponentTree& tree,
                                   const ChangeOperation& op) {
  Findings out;
  const std::string who = "operation " + op.id + ": ";
  if (op.profit < Tenths(0)) out.push_back(who + "negative profit");
  if (op.cost < Tenths(0)) out.push_back(who + "negative cost");

  const LeafComponent* leaf = tree.find_leaf(op.leaf);
  if (leaf == nullptr) {
    out.push_back(who + "unknown leaf " + op.leaf);
    return out;
  }
  if (leaf->find(op.from_alt) == nullptr)
    out.push_back(who + "unknown alternative " + op.from_alt + " at leaf " +
                  op.leaf);
  if (op.is_none()) {
    if (op.profit != Tenths(0))
      out.push_back("None operation must have zero profit");
    if (op.cost != Tenths(0))
      out.push_back("None operation must have zero cost");
    return out;
  }
  if (leaf->find(*op.to_alt) == nullptr)
    out.push_back(who + "unknown alternative " + *op.to_alt + " at leaf " +
                  op.leaf);
  if (*op.to_alt == op.from_alt) out.push_back("self-loop change");
  return out;
}

inline Findings validate_group(const ComponentTree& tree,
                               const OperationGroup& group) {
  Findings out;
  const std::string where = "group " + std::to_string(group.index) + ": ";
  if (group.members.empty()) {
    out.push_back(where + "no operations");
    return out;
  }
  if (!group.members.front().is_none())
    out.push_back(where + "first operation must be the None-marker");
  std::size_t nones = 0;
  std::set<std::string, std::less<>> ids;
  for (const auto& op : group.members) {
    if (op.is_none()) ++nones;
    if (op.leaf != group.leaf)
      out.push_back(where + "operation " + op.id + " targets " + op.leaf +
                    ", group targets " + group.leaf);
    if (op.group != group.index)
      out.push_back(where + "operation " + op.id + " declares group " +
                    std::to_string(op.group));
    if (!ids.insert(op.id).second)
      out.push_back(where + "duplicate operation id " + op.id);
    for (auto& f : validate_operation(tree, op)) out.push_back(std::move(f));
  }
  if (nones != 1)
    out.push_back(where + "expected exactly one None-marker, found " +
                  std::to_string(nones));
  return out;
}

/// The None-marker is the identity; other operations require `from_alt` to
/// be held at the leaf.
inline Configuration apply_operation(const Configuration& config,
                                     const ChangeOperation& op) {
  if (op.is_none()) return config;
  const std::string* held = config.at(op.leaf);
  if (held == nullptr)
    throw PreconditionError("operation " + op.id + " not applicable: leaf " +
                            op.leaf + " is unassigned in " + config.id);
  if (*held != op.from_alt)
    throw PreconditionError("operation " + op.id + " not applicable: leaf " +
                            op.leaf + " holds " + *held + ", expected " +
                            op.from_alt);
  Configuration out = config;
  out.assignment[op.leaf] = *op.to_alt;
  return out;
}

/// Structural rules for a stage's group list, independent of any tree:
/// indices consecutive from 1, one None-marker listed first, distinct leaves.
inline Findings check_group_set(std::span<const OperationGroup> groups) {
  Findings out;
  std::set<int> seen;
  std::set<std::string, std::less<>> leaves;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& group = groups[g];
    if (!seen.insert(group.index).second)
      out.push_back("duplicate group index " + std::to_string(group.index));
    else if (group.index != static_cast<int>(g) + 1)
      out.push_back("group indices must be consecutive from 1: found " +
                    std::to_string(group.index) + " at position " +
                    std::to_string(g + 1));
    if (group.members.empty() || !group.members.front().is_none())
      out.push_back("group " + std::to_string(group.index) +
                    " without None-marker");
    if (!leaves.insert(group.leaf).second)
      out.push_back("leaf " + group.leaf + " targeted by more than one group");
    for (const auto& op : group.members) {
      if (op.profit < Tenths(0) || op.cost < Tenths(0))
        out.push_back("operation " + op.id + " has a negative estimate");
    }
  }
  return out;
}

/// One item per operation, in group and member order, so item (g, j) is
/// groups[g].members[j].
inline MckpInstance build_mckp_instance(std::span<const OperationGroup> groups,
                                        Tenths budget, Comparator comparator) {
  Findings findings = check_group_set(groups);
  if (budget < Tenths(0)) findings.push_back("negative budget");
  if (!findings.empty())
    throw ValidationError("invalid operation groups: " +
                              join_findings(findings),
                          findings);
  MckpInstance instance;
  instance.budget = budget;
  instance.comparator = comparator;
  instance.groups.reserve(groups.size());
  for (const auto& group : groups) {
    auto& items = instance.groups.emplace_back();
    for (const auto& op : group.members) items.push_back({op.profit, op.cost});
  }
  return instance;
}

/// Group sizes q_1..q_n of a group list.
inline std::vector<std::size_t> group_sizes(
    std::span<const OperationGroup> groups) {
  std::vector<std::size_t> q;
  for (const auto& g : groups) q.push_back(g.members.size());
  return q;
}

/// Non-None operations chosen by a solution over an instance built from
/// `groups`.
inline std::vector<ChangeOperation> selected_operations(
    std::span<const OperationGroup> groups, const MckpSolution& solution) {
  std::vector<ChangeOperation> out;
  for (std::size_t g = 0; g < groups.size() && g < solution.selection.size();
       ++g) {
    const auto& pick = solution.selection[g];
    if (!pick) continue;
    const auto& op = groups[g].members.at(*pick);
    if (!op.is_none()) out.push_back(op);
  }
  return out;
}

/// Looks an operation up by id; returns its (group, item) position.
inline std::optional<ItemRef> find_operation(
    std::span<const OperationGroup> groups, std::string_view op_id) {
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::size_t j = 0; j < groups[g].members.size(); ++j)
      if (groups[g].members[j].id == op_id) return ItemRef{g, j};
  return std::nullopt;
}

}  // namespace morphplan

#endif  // MORPHPLAN_CHANGEOPS_HPP
