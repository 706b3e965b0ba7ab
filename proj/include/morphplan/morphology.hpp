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

// Hierarchical morphological model: composite nodes combine their children
// with the conjunction "*", leaves list mutually exclusive alternatives.
// A Configuration picks exactly one alternative per leaf.

#ifndef MORPHPLAN_MORPHOLOGY_HPP
#define MORPHPLAN_MORPHOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "morphplan/errors.hpp"

namespace morphplan {

struct Alternative {
  std::string id;
  std::string label;
  /// Sibling alternatives this one combines (B32_8 = B32_6 & B32_7).
  /// Metadata only; never used by the solvers.
  std::vector<std::string> composed_of;

  friend bool operator==(const Alternative&, const Alternative&) = default;
};

struct LeafComponent {
  std::string id;
  std::string label;
  std::vector<Alternative> alternatives;

  const Alternative* find(std::string_view alt_id) const {
    for (const auto& a : alternatives)
      if (a.id == alt_id) return &a;
    return nullptr;
  }

  friend bool operator==(const LeafComponent&, const LeafComponent&) = default;
};

struct Node;

struct CompositeNode {
  std::string id;
  std::string label;
  std::vector<Node> children;

  friend bool operator==(const CompositeNode&, const CompositeNode&) = default;
};

struct Node {
  std::variant<CompositeNode, LeafComponent> value;

  bool is_leaf() const { return std::holds_alternative<LeafComponent>(value); }
  const LeafComponent& leaf() const { return std::get<LeafComponent>(value); }
  const CompositeNode& composite() const { return std::get<CompositeNode>(value); }
  const std::string& id() const {
    return is_leaf() ? leaf().id : composite().id;
  }

  friend bool operator==(const Node&, const Node&) = default;
};

inline Node make_node(LeafComponent leaf) { return Node{std::move(leaf)}; }
inline Node make_node(CompositeNode composite) {
  return Node{std::move(composite)};
}

/// Checks the identifier syntax [A-Za-z][A-Za-z0-9]*(_[0-9]+)?
inline bool is_valid_id(std::string_view id) {
  if (id.empty()) return false;
  const auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  };
  const auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(id[0])) return false;
  std::size_t i = 1;
  while (i < id.size() && (alpha(id[i]) || digit(id[i]))) ++i;
  if (i == id.size()) return true;
  if (id[i] != '_' || i + 1 == id.size()) return false;
  for (++i; i < id.size(); ++i)
    if (!digit(id[i])) return false;
  return true;
}

/// Structural findings for a candidate tree root. Empty means the root can
/// be turned into a ComponentTree.
inline Findings check_tree(const CompositeNode& root) {
  Findings out;
  std::set<std::string, std::less<>> node_ids;

  const auto check_leaf = [&](const LeafComponent& leaf) {
    if (leaf.alternatives.empty()) {
      out.push_back("empty alternative list: leaf " + leaf.id);
      return;
    }
    std::map<std::string, const Alternative*, std::less<>> by_id;
    for (const auto& alt : leaf.alternatives) {
      if (!is_valid_id(alt.id))
        out.push_back("malformed alternative id: \"" + alt.id + "\" in leaf " +
                      leaf.id);
      if (!by_id.emplace(alt.id, &alt).second)
        out.push_back("duplicate alternative id: " + alt.id + " in leaf " +
                      leaf.id);
    }
    for (const auto& alt : leaf.alternatives) {
      for (const auto& ref : alt.composed_of) {
        if (ref == alt.id)
          out.push_back("self-referencing composed_of: " + alt.id);
        else if (!by_id.contains(ref))
          out.push_back("dangling composed_of: " + alt.id + " -> " + ref);
      }
    }
    // Cycle detection over the composed_of graph (white/grey/black DFS).
    std::map<std::string, int, std::less<>> colour;
    std::function<bool(const Alternative&)> visit = [&](const Alternative& a) {
      colour[a.id] = 1;
      for (const auto& ref : a.composed_of) {
        if (ref == a.id) continue;
        const auto it = by_id.find(ref);
        if (it == by_id.end()) continue;
        const int c = colour[ref];
        if (c == 1) return true;
        if (c == 0 && visit(*it->second)) return true;
      }
      colour[a.id] = 2;
      return false;
    };
    for (const auto& alt : leaf.alternatives) {
      if (colour[alt.id] == 0 && visit(alt)) {
        out.push_back("composed_of cycle in leaf " + leaf.id);
        break;
      }
    }
  };

  std::function<void(const Node&)> walk = [&](const Node& node) {
    const std::string& id = node.id();
    if (!is_valid_id(id)) out.push_back("malformed node id: \"" + id + "\"");
    if (!node_ids.insert(id).second) out.push_back("duplicate id: " + id);
    if (node.is_leaf()) {
      check_leaf(node.leaf());
      return;
    }
    const auto& composite = node.composite();
    if (composite.children.empty())
      out.push_back("composite without children: " + id);
    for (const auto& child : composite.children) walk(child);
  };

  if (!is_valid_id(root.id))
    out.push_back("malformed node id: \"" + root.id + "\"");
  node_ids.insert(root.id);
  if (root.children.empty())
    out.push_back("model has no components: " + root.id);
  for (const auto& child : root.children) walk(child);
  return out;
}

/// A validated, immutable morphological tree.
class ComponentTree {
 public:
  /// Throws ValidationError listing every structural problem.
  static ComponentTree from_root(CompositeNode root) {
    Findings findings = check_tree(root);
    if (!findings.empty())
      throw ValidationError("invalid model " + root.id + ": " +
                                join_findings(findings),
                            findings);
    return ComponentTree(std::move(root));
  }

  const std::string& id() const { return root_.id; }
  const std::string& label() const { return root_.label; }
  const CompositeNode& root() const { return root_; }

  /// Leaves in depth-first declaration order.
  std::span<const LeafComponent> leaves() const { return leaves_; }

  const LeafComponent* find_leaf(std::string_view leaf_id) const {
    const auto it = leaf_index_.find(leaf_id);
    return it == leaf_index_.end() ? nullptr : &leaves_[it->second];
  }

  /// Position of the leaf in declaration order, or npos.
  std::size_t leaf_position(std::string_view leaf_id) const {
    const auto it = leaf_index_.find(leaf_id);
    return it == leaf_index_.end() ? npos : it->second;
  }

  std::size_t alternative_count() const {
    std::size_t n = 0;
    for (const auto& leaf : leaves_) n += leaf.alternatives.size();
    return n;
  }

  /// Root counts as level 1.
  std::size_t depth() const { return depth_of(root_); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const ComponentTree& a, const ComponentTree& b) {
    return a.root_ == b.root_;
  }

 private:
  explicit ComponentTree(CompositeNode root) : root_(std::move(root)) {
    collect(root_);
    for (std::size_t i = 0; i < leaves_.size(); ++i)
      leaf_index_.emplace(leaves_[i].id, i);
  }

  void collect(const CompositeNode& composite) {
    for (const auto& child : composite.children) {
      if (child.is_leaf())
        leaves_.push_back(child.leaf());
      else
        collect(child.composite());
    }
  }

  static std::size_t depth_of(const CompositeNode& composite) {
    std::size_t deepest = 0;
    for (const auto& child : composite.children)
      deepest = std::max(deepest, child.is_leaf()
                                      ? std::size_t{1}
                                      : depth_of(child.composite()));
    return deepest + 1;
  }

  CompositeNode root_;
  std::vector<LeafComponent> leaves_;
  std::map<std::string, std::size_t, std::less<>> leaf_index_;
};

/// One alternative per leaf of the tree named by tree_id.
struct Configuration {
  std::string id;
  std::string tree_id;
  std::map<std::string, std::string, std::less<>> assignment;

  const std::string* at(std::string_view leaf_id) const {
    const auto it = assignment.find(leaf_id);
    return it == assignment.end() ? nullptr : &it->second;
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct ChangeDelta {
  std::string leaf;
  std::string from_alt;
  std::string to_alt;

  friend bool operator==(const ChangeDelta&, const ChangeDelta&) = default;
};

inline std::string to_string(const ChangeDelta& d) {
  return d.leaf + ": " + d.from_alt + " -> " + d.to_alt;
}

inline Findings validate_configuration(const ComponentTree& tree,
                                       const Configuration& config) {
  Findings out;
  if (config.tree_id != tree.id())
    out.push_back("tree mismatch: configuration " + config.id + " targets " +
                  config.tree_id + ", model is " + tree.id());
  for (const auto& leaf : tree.leaves()) {
    const std::string* alt = config.at(leaf.id);
    if (alt == nullptr)
      out.push_back("unassigned leaf: " + leaf.id);
    else if (leaf.find(*alt) == nullptr)
      out.push_back("unknown alternative: " + *alt + " at leaf " + leaf.id);
  }
  for (const auto& [leaf_id, alt] : config.assignment)
    if (tree.find_leaf(leaf_id) == nullptr)
      out.push_back("unknown leaf: " + leaf_id);
  return out;
}

namespace detail {

inline void require_valid(const ComponentTree& tree,
                          const Configuration& config) {
  Findings findings = validate_configuration(tree, config);
  if (!findings.empty())
    throw ValidationError("invalid configuration " + config.id + ": " +
                              join_findings(findings),
                          findings);
}

inline std::string render_node(const Node& node, const Configuration& config) {
  if (node.is_leaf()) return *config.at(node.leaf().id);
  const auto& children = node.composite().children;
  std::string inner;
  for (const auto& child : children) {
    if (!inner.empty()) inner += " * ";
    inner += render_node(child, config);
  }
  return children.size() > 1 ? "(" + inner + ")" : inner;
}

}  // namespace detail

/// Canonical "*"-expression, e.g. "(B11_6 * B12_4) * (B21_8 * B22_2) * ...".
/// The root is never parenthesized; nested composites are, unless they have a
/// single child.
inline std::string render_configuration(const ComponentTree& tree,
                                        const Configuration& config) {
  detail::require_valid(tree, config);
  std::string out;
  for (const auto& child : tree.root().children) {
    if (!out.empty()) out += " * ";
    out += detail::render_node(child, config);
  }
  return out;
}

/// One delta per differing leaf, in leaf declaration order.
inline std::vector<ChangeDelta> diff_configurations(const ComponentTree& tree,
                                                    const Configuration& from,
                                                    const Configuration& to) {
  if (from.tree_id != to.tree_id)
    throw ValidationError("mismatched tree references: " + from.tree_id +
                          " vs " + to.tree_id);
  detail::require_valid(tree, from);
  detail::require_valid(tree, to);
  std::vector<ChangeDelta> out;
  for (const auto& leaf : tree.leaves()) {
    const std::string& a = *from.at(leaf.id);
    const std::string& b = *to.at(leaf.id);
    if (a != b) out.push_back({leaf.id, a, b});
  }
  return out;
}

/// Applies deltas authored against `config`. The result keeps config's id
/// unless `result_id` is given.
inline Configuration apply_deltas(const ComponentTree& tree,
                                  const Configuration& config,
                                  std::span<const ChangeDelta> deltas,
                                  std::string result_id = {}) {
  detail::require_valid(tree, config);
  std::set<std::string, std::less<>> touched;
  Configuration out = config;
  if (!result_id.empty()) out.id = std::move(result_id);
  for (const auto& d : deltas) {
    const LeafComponent* leaf = tree.find_leaf(d.leaf);
    if (leaf == nullptr)
      throw ValidationError("delta targets unknown leaf: " + d.leaf);
    if (!touched.insert(d.leaf).second)
      throw ValidationError("duplicate leaf target: " + d.leaf);
    if (d.from_alt == d.to_alt)
      throw ValidationError("self-loop change: " + to_string(d));
    if (leaf->find(d.to_alt) == nullptr)
      throw ValidationError("unknown alternative: " + d.to_alt + " at leaf " +
                            d.leaf);
    const std::string& held = *config.at(d.leaf);
    if (held != d.from_alt)
      throw PreconditionError("delta not applicable: leaf " + d.leaf +
                              " holds " + held + ", expected " + d.from_alt);
    out.assignment[d.leaf] = d.to_alt;
  }
  return out;
}

}  // namespace morphplan

#endif  // MORPHPLAN_MORPHOLOGY_HPP
