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

// JSON documents exchanged by the CLI and stored under data/.
//
//   model          {"id","label","nodes":[node...]}
//                  node = {"id","label","children":[...]}
//                       | {"id","label","alternatives":[{"id","label",
//                                                        "composed_of"?}]}
//   configuration  {"id","tree_id","assignment":{leaf: alternative}}
//   operation set  {"stage_id","budget","comparator","groups":[{"group",
//                   "leaf","operations":[{"id","from","to"|null,"profit",
//                   "cost","impact_class"?,"activity_refs"?}]}],
//                   "solver"?,"result_id"?}
//   instance       {"budget","comparator","groups":[[{"profit","cost"}]]}
//   solution       {"solver","profit","cost","selection":[j|null],
//                   "selected"?:[id]}
//   chain          {"model","initial","stages":[path...]}
//
// Decimal quantities are strings with at most one fractional digit. Item
// indices in solution documents are 1-based.

#ifndef MORPHPLAN_INTERCHANGE_HPP
#define MORPHPLAN_INTERCHANGE_HPP

#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "morphplan/changeops.hpp"
#include "morphplan/datasets.hpp"
#include "morphplan/decimal.hpp"
#include "morphplan/errors.hpp"
#include "morphplan/mckp.hpp"
#include "morphplan/morphology.hpp"
#include "morphplan/planner.hpp"

namespace morphplan {

using Json = nlohmann::ordered_json;

namespace io {

inline std::string to_text(const Json& doc) { return doc.dump(2) + "\n"; }

inline Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

namespace detail {

[[noreturn]] inline void violation(const std::string& path,
                                   const std::string& what) {
  throw SchemaError("schema violation at " + (path.empty() ? "/" : path) +
                    ": " + what);
}

inline const Json& object(const Json& j, const std::string& path) {
  if (!j.is_object()) violation(path, "expected object");
  return j;
}

inline const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) violation(path, "expected array");
  return j;
}

inline const Json& field(const Json& obj, const char* key,
                         const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) violation(path, std::string("missing field \"") + key +
                                           "\"");
  return *it;
}

inline std::string string_of(const Json& j, const std::string& path) {
  if (!j.is_string()) violation(path, "expected string");
  return j.get<std::string>();
}

inline std::string string_field(const Json& obj, const char* key,
                                const std::string& path) {
  return string_of(field(obj, key, path), path + "/" + key);
}

inline std::string optional_string(const Json& obj, const char* key,
                                   const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) return {};
  return string_of(*it, path + "/" + key);
}

inline Tenths decimal_field(const Json& obj, const char* key,
                            const std::string& path) {
  const std::string sub = path + "/" + key;
  const Json& j = field(obj, key, path);
  if (!j.is_string()) violation(sub, "expected decimal string");
  try {
    return parse_tenths(j.get<std::string>());
  } catch (const SchemaError& e) {
    violation(sub, e.what());
  }
}

inline std::vector<std::string> string_list(const Json& j,
                                            const std::string& path) {
  std::vector<std::string> out;
  array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(string_of(j[i], path + "/" + std::to_string(i)));
  return out;
}

inline Node parse_node(const Json& j, const std::string& path) {
  object(j, path);
  const std::string id = string_field(j, "id", path);
  const std::string label = optional_string(j, "label", path);
  const bool has_children = j.contains("children");
  const bool has_alts = j.contains("alternatives");
  if (has_children == has_alts)
    violation(path, "node must have exactly one of \"children\" or "
                    "\"alternatives\"");
  if (has_children) {
    const std::string sub = path + "/children";
    const Json& children = array(j["children"], sub);
    CompositeNode c{id, label, {}};
    for (std::size_t i = 0; i < children.size(); ++i)
      c.children.push_back(parse_node(children[i], sub + "/" + std::to_string(i)));
    return make_node(std::move(c));
  }
  const std::string sub = path + "/alternatives";
  const Json& alts = array(j["alternatives"], sub);
  LeafComponent leaf{id, label, {}};
  for (std::size_t i = 0; i < alts.size(); ++i) {
    const std::string ap = sub + "/" + std::to_string(i);
    object(alts[i], ap);
    Alternative a{string_field(alts[i], "id", ap),
                  optional_string(alts[i], "label", ap),
                  {}};
    if (alts[i].contains("composed_of"))
      a.composed_of = string_list(alts[i]["composed_of"], ap + "/composed_of");
    leaf.alternatives.push_back(std::move(a));
  }
  return make_node(std::move(leaf));
}

inline Json node_json(const Node& node) {
  Json j;
  j["id"] = node.id();
  if (node.is_leaf()) {
    j["label"] = node.leaf().label;
    Json alts = Json::array();
    for (const auto& a : node.leaf().alternatives) {
      Json aj;
      aj["id"] = a.id;
      aj["label"] = a.label;
      if (!a.composed_of.empty()) aj["composed_of"] = a.composed_of;
      alts.push_back(std::move(aj));
    }
    j["alternatives"] = std::move(alts);
  } else {
    j["label"] = node.composite().label;
    Json children = Json::array();
    for (const auto& c : node.composite().children)
      children.push_back(node_json(c));
    j["children"] = std::move(children);
  }
  return j;
}

}  // namespace detail

// --- model -----------------------------------------------------------------

/// Throws SchemaError for shape problems, ValidationError for invariant ones.
template <std::same_as<Json> J>
ComponentTree parse_model(const J& doc) {
  using namespace detail;
  object(doc, "");
  CompositeNode root{string_field(doc, "id", ""),
                     optional_string(doc, "label", ""),
                     {}};
  const Json& nodes = array(field(doc, "nodes", ""), "/nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    root.children.push_back(parse_node(nodes[i], "/nodes/" + std::to_string(i)));
  return ComponentTree::from_root(std::move(root));
}

inline ComponentTree parse_model(std::string_view text) {
  return parse_model(parse_text(text));
}

inline Json serialize_model(const ComponentTree& tree) {
  Json doc;
  doc["id"] = tree.id();
  doc["label"] = tree.label();
  Json nodes = Json::array();
  for (const auto& child : tree.root().children)
    nodes.push_back(detail::node_json(child));
  doc["nodes"] = std::move(nodes);
  return doc;
}

// --- configuration ---------------------------------------------------------

inline Configuration parse_configuration(const Json& doc) {
  using namespace detail;
  object(doc, "");
  Configuration c;
  c.id = string_field(doc, "id", "");
  c.tree_id = string_field(doc, "tree_id", "");
  const Json& a = object(field(doc, "assignment", ""), "/assignment");
  for (const auto& [leaf, alt] : a.items())
    c.assignment.emplace(leaf, string_of(alt, "/assignment/" + leaf));
  return c;
}

/// Assignment entries follow the tree's leaf order when a tree is given.
inline Json serialize_configuration(const Configuration& config,
                                    const ComponentTree* tree = nullptr) {
  Json doc;
  doc["id"] = config.id;
  doc["tree_id"] = config.tree_id;
  Json a = Json::object();
  if (tree != nullptr) {
    for (const auto& leaf : tree->leaves())
      if (const std::string* alt = config.at(leaf.id)) a[leaf.id] = *alt;
  }
  for (const auto& [leaf, alt] : config.assignment)
    if (!a.contains(leaf)) a[leaf] = alt;
  doc["assignment"] = std::move(a);
  return doc;
}

// --- operation set / stage plan --------------------------------------------

inline StagePlan parse_stage_plan(const Json& doc) {
  using namespace detail;
  object(doc, "");
  StagePlan plan;
  plan.stage_id = string_field(doc, "stage_id", "");
  plan.budget = decimal_field(doc, "budget", "");
  if (doc.contains("comparator")) {
    const std::string c = string_field(doc, "comparator", "");
    const auto parsed = parse_comparator(c);
    if (!parsed) violation("/comparator", "expected inclusive|exclusive");
    plan.comparator = *parsed;
  }
  if (doc.contains("solver")) {
    const auto parsed = parse_solver(string_field(doc, "solver", ""));
    if (!parsed) violation("/solver", "expected greedy|dp|exhaustive");
    plan.solver = *parsed;
  }
  plan.result_id = optional_string(doc, "result_id", "");
  const Json& groups = array(field(doc, "groups", ""), "/groups");
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::string gp = "/groups/" + std::to_string(g);
    object(groups[g], gp);
    OperationGroup group;
    const Json& index = field(groups[g], "group", gp);
    if (!index.is_number_integer()) violation(gp + "/group", "expected integer");
    group.index = index.get<int>();
    group.leaf = string_field(groups[g], "leaf", gp);
    const Json& ops = array(field(groups[g], "operations", gp),
                            gp + "/operations");
    for (std::size_t j = 0; j < ops.size(); ++j) {
      const std::string op_path = gp + "/operations/" + std::to_string(j);
      const Json& oj = object(ops[j], op_path);
      ChangeOperation op;
      op.id = string_field(oj, "id", op_path);
      op.group = group.index;
      op.leaf = group.leaf;
      op.from_alt = string_field(oj, "from", op_path);
      const Json& to = field(oj, "to", op_path);
      if (!to.is_null()) op.to_alt = string_of(to, op_path + "/to");
      op.profit = decimal_field(oj, "profit", op_path);
      op.cost = decimal_field(oj, "cost", op_path);
      if (oj.contains("impact_class")) {
        const auto parsed = parse_impact_class(
            string_field(oj, "impact_class", op_path));
        if (!parsed) violation(op_path + "/impact_class", "unknown impact class");
        op.impact_class = parsed;
      }
      if (oj.contains("activity_refs"))
        op.activity_refs = string_list(oj["activity_refs"],
                                       op_path + "/activity_refs");
      group.members.push_back(std::move(op));
    }
    plan.groups.push_back(std::move(group));
  }
  return plan;
}

inline Json serialize_stage_plan(const StagePlan& plan) {
  Json doc;
  doc["stage_id"] = plan.stage_id;
  doc["budget"] = format_tenths(plan.budget);
  doc["comparator"] = to_string(plan.comparator);
  doc["solver"] = to_string(plan.solver);
  if (!plan.result_id.empty()) doc["result_id"] = plan.result_id;
  Json groups = Json::array();
  for (const auto& g : plan.groups) {
    Json gj;
    gj["group"] = g.index;
    gj["leaf"] = g.leaf;
    Json ops = Json::array();
    for (const auto& op : g.members) {
      Json oj;
      oj["id"] = op.id;
      oj["from"] = op.from_alt;
      oj["to"] = op.to_alt ? Json(*op.to_alt) : Json(nullptr);
      oj["profit"] = format_tenths(op.profit);
      oj["cost"] = format_tenths(op.cost);
      if (op.impact_class) oj["impact_class"] = to_string(*op.impact_class);
      if (!op.activity_refs.empty()) oj["activity_refs"] = op.activity_refs;
      ops.push_back(std::move(oj));
    }
    gj["operations"] = std::move(ops);
    groups.push_back(std::move(gj));
  }
  doc["groups"] = std::move(groups);
  return doc;
}

// --- instance / solution ---------------------------------------------------

inline MckpInstance parse_instance(const Json& doc) {
  using namespace detail;
  object(doc, "");
  MckpInstance inst;
  inst.budget = decimal_field(doc, "budget", "");
  const auto c = parse_comparator(string_field(doc, "comparator", ""));
  if (!c) violation("/comparator", "expected inclusive|exclusive");
  inst.comparator = *c;
  const Json& groups = array(field(doc, "groups", ""), "/groups");
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::string gp = "/groups/" + std::to_string(g);
    const Json& items = array(groups[g], gp);
    auto& out = inst.groups.emplace_back();
    for (std::size_t j = 0; j < items.size(); ++j) {
      const std::string ip = gp + "/" + std::to_string(j);
      object(items[j], ip);
      out.push_back({decimal_field(items[j], "profit", ip),
                     decimal_field(items[j], "cost", ip)});
    }
  }
  return inst;
}

inline Json serialize_instance(const MckpInstance& inst) {
  Json doc;
  doc["budget"] = format_tenths(inst.budget);
  doc["comparator"] = to_string(inst.comparator);
  Json groups = Json::array();
  for (const auto& items : inst.groups) {
    Json gj = Json::array();
    for (const auto& it : items)
      gj.push_back(Json{{"profit", format_tenths(it.profit)},
                        {"cost", format_tenths(it.cost)}});
    groups.push_back(std::move(gj));
  }
  doc["groups"] = std::move(groups);
  return doc;
}

/// An instance file, or an operation set from which the instance is built.
struct InstanceDocument {
  MckpInstance instance;
  std::optional<StagePlan> plan;

  /// Operation id for item (g, j): the operation's own id, or "x{g}_{j}"
  /// (1-based) for bare instances.
  std::string item_id(ItemRef r) const {
    if (plan) return plan->groups[r.group].members[r.item].id;
    return "x" + std::to_string(r.group + 1) + "_" + std::to_string(r.item + 1);
  }

  std::optional<ItemRef> find_item(std::string_view id) const {
    for (std::size_t g = 0; g < instance.groups.size(); ++g)
      for (std::size_t j = 0; j < instance.groups[g].size(); ++j)
        if (item_id({g, j}) == id) return ItemRef{g, j};
    return std::nullopt;
  }
};

inline InstanceDocument parse_instance_document(const Json& doc) {
  detail::object(doc, "");
  if (doc.contains("stage_id")) {
    InstanceDocument out;
    out.plan = parse_stage_plan(doc);
    out.instance = build_mckp_instance(out.plan->groups, out.plan->budget,
                                       out.plan->comparator);
    return out;
  }
  return InstanceDocument{parse_instance(doc), std::nullopt};
}

inline Json serialize_solution(const MckpSolution& s,
                               const InstanceDocument* doc = nullptr) {
  Json j;
  j["solver"] = to_string(s.solver);
  j["profit"] = format_tenths(s.total_profit);
  j["cost"] = format_tenths(s.total_cost);
  Json sel = Json::array();
  Json ids = Json::array();
  for (std::size_t g = 0; g < s.selection.size(); ++g) {
    if (s.selection[g]) {
      sel.push_back(*s.selection[g] + 1);
      if (doc != nullptr) ids.push_back(doc->item_id({g, *s.selection[g]}));
    } else {
      sel.push_back(nullptr);
    }
  }
  j["selection"] = std::move(sel);
  if (doc != nullptr) j["selected"] = std::move(ids);
  return j;
}

inline MckpSolution parse_solution(const Json& doc) {
  using namespace detail;
  object(doc, "");
  MckpSolution s;
  const auto solver = parse_solver(string_field(doc, "solver", ""));
  if (!solver) violation("/solver", "expected greedy|dp|exhaustive");
  s.solver = *solver;
  s.total_profit = decimal_field(doc, "profit", "");
  s.total_cost = decimal_field(doc, "cost", "");
  const Json& sel = array(field(doc, "selection", ""), "/selection");
  for (std::size_t g = 0; g < sel.size(); ++g) {
    if (sel[g].is_null()) {
      s.selection.emplace_back();
    } else if (sel[g].is_number_integer() && sel[g].get<long long>() >= 1) {
      s.selection.emplace_back(sel[g].get<std::size_t>() - 1);
    } else {
      violation("/selection/" + std::to_string(g),
                "expected 1-based item index or null");
    }
  }
  return s;
}

// --- chain -----------------------------------------------------------------

struct ChainDocument {
  std::string model;    // path
  std::string initial;  // path or built-in configuration id
  std::vector<std::string> stages;  // paths to operation sets
};

inline ChainDocument parse_chain(const Json& doc) {
  using namespace detail;
  object(doc, "");
  ChainDocument c;
  c.model = string_field(doc, "model", "");
  c.initial = string_field(doc, "initial", "");
  c.stages = string_list(field(doc, "stages", ""), "/stages");
  return c;
}

inline Json serialize_chain(const ChainDocument& c) {
  Json doc;
  doc["model"] = c.model;
  doc["initial"] = c.initial;
  doc["stages"] = c.stages;
  return doc;
}

// --- activity catalog ------------------------------------------------------

inline Json serialize_activities(
    const std::vector<datasets::ActivityCatalogEntry>& entries) {
  Json list = Json::array();
  for (const auto& e : entries)
    list.push_back(Json{{"id", e.id},
                        {"description", e.description},
                        {"source_row", e.source_row}});
  return Json{{"activities", std::move(list)}};
}

}  // namespace io
}  // namespace morphplan

#endif  // MORPHPLAN_INTERCHANGE_HPP
