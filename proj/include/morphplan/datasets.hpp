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

// Built-in worked data: the wireless-generation model, the 1G..7G catalog,
// the two improvement stages for 5G, an enterprise-network fixture and the
// improvement activity catalog.

#ifndef MORPHPLAN_DATASETS_HPP
#define MORPHPLAN_DATASETS_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morphplan/changeops.hpp"
#include "morphplan/decimal.hpp"
#include "morphplan/morphology.hpp"
#include "morphplan/planner.hpp"

namespace morphplan::datasets {

namespace detail {

struct AltSpec {
  std::string label;
  std::vector<int> composed_of = {};  // sibling numbers
};

inline Node leaf(const std::string& id, const std::string& label,
                 std::initializer_list<AltSpec> alts) {
  LeafComponent out{id, label, {}};
  int n = 0;
  for (const auto& a : alts) {
    Alternative alt{id + "_" + std::to_string(++n), a.label, {}};
    for (int k : a.composed_of)
      alt.composed_of.push_back(id + "_" + std::to_string(k));
    out.alternatives.push_back(std::move(alt));
  }
  return make_node(std::move(out));
}

inline Node composite(const std::string& id, const std::string& label,
                      std::vector<Node> children) {
  return make_node(CompositeNode{id, label, std::move(children)});
}

inline Configuration config(const std::string& id, const std::string& tree_id,
                            std::initializer_list<const char*> alts) {
  Configuration c{id, tree_id, {}};
  for (const char* alt : alts) {
    const std::string a(alt);
    c.assignment.emplace(a.substr(0, a.rfind('_')), a);
  }
  return c;
}

inline ChangeOperation none_op(int group, const std::string& prefix,
                               const std::string& leaf,
                               const std::string& from) {
  return ChangeOperation{prefix + std::to_string(group) + "_1",
                         group,
                         leaf,
                         from,
                         std::nullopt,
                         Tenths(0),
                         Tenths(0),
                         std::nullopt,
                         {}};
}

struct OpSpec {
  const char* to;
  const char* profit;
  const char* cost;
};

inline OperationGroup group(const std::string& prefix, int index,
                            const std::string& leaf, const std::string& from,
                            std::initializer_list<OpSpec> ops) {
  OperationGroup g{index, leaf, {}};
  g.members.push_back(none_op(index, prefix, leaf, from));
  int j = 1;
  for (const auto& op : ops) {
    g.members.push_back(ChangeOperation{
        prefix + std::to_string(index) + "_" + std::to_string(++j), index,
        leaf, from, std::string(op.to), parse_tenths(op.profit),
        parse_tenths(op.cost), std::nullopt, {}});
  }
  return g;
}

}  // namespace detail

inline constexpr const char* kWirelessModelId = "S";

/// Hierarchical structure of wireless mobile system generations:
/// S = B1(B11, B12) * B2(B21, B22) * B3(B31, B32) * B4(B41, B42, B43,
/// B44(B441, B442)); 11 leaves, 55 alternatives.
inline ComponentTree builtin_model() {
  using detail::composite;
  using detail::leaf;
  CompositeNode root{kWirelessModelId, "wireless mobile system", {}};
  root.children = {
      composite(
          "B1", "definition",
          {leaf("B11", "technology",
                {{"analog cellular technology"},
                 {"digital cellular technology (digital narrow band circuit "
                  "data)"},
                 {"packet data"},
                 {"digital broadband packet data & IP technology"},
                 {"all IP very high throughput"},
                 {"flat IP network", {4, 5}}}),
           leaf("B12", "switching",
                {{"circuit"},
                 {"packet"},
                 {"circuit & packet", {1, 2}},
                 {"all packet"}})}),
      composite(
          "B2", "services",
          {leaf("B21", "service",
                {{"mobile telephony (voice)"},
                 {"digital voice"},
                 {"SMS"},
                 {"higher capacity packetized data"},
                 {"digital voice & SMS & higher capacity packetized data",
                  {2, 3, 4}},
                 {"integrated high quality audio, video and data"},
                 {"dynamic information access, wearable devices"},
                 {"AI capability"},
                 {"dynamic information access, wearable devices & AI "
                  "capability",
                  {7, 8}}}),
           leaf("B22", "cloud computing", {{"none"}, {"cloud computing"}})}),
      composite(
          "B3", "data transmission & access",
          {leaf("B31", "data bandwidth/throughput speed/data rates",
                {{"2 kbps"},
                 {"64 kbps"},
                 {"400 kbps to 30 Mbps"},
                 {"3-5 Mbps, 100 Mbps (WiFi)"},
                 {"200 Mbps to 1 Gbps"},
                 {"approx 20 Gbps"}}),
           leaf("B32", "multiplexing/access technology",
                {{"FDMA"},
                 {"TDMA"},
                 {"FDMA & TDMA", {1, 2}},
                 {"CDMA"},
                 {"TDMA & CDMA", {2, 4}},
                 {"OFDMA"},
                 {"LAS-CDMA"},
                 {"OFDMA & LAS-CDMA", {6, 7}}})}),
      composite(
          "B4", "networking",
          {leaf("B41", "core network",
                {{"PSTN"},
                 {"GSM"},
                 {"PSTN & GSM", {1, 2}},
                 {"packet N/W"},
                 {"Internet"},
                 {"packet N/W & Internet", {4, 5}},
                 {"satellite network"},
                 {"packet N/W & Internet & satellite network", {4, 5, 7}}}),
           leaf("B42", "handoff",
                {{"horizontal"}, {"vertical"}, {"horizontal & vertical", {1, 2}}}),
           leaf("B43", "heterogeneous networks (HetNets)",
                {{"none"}, {"aggregation of different networks (HetNets)"}}),
           composite(
               "B44", "space communication",
               {leaf("B441", "satellite network",
                     {{"none"},
                      {"telecommunication network"},
                      {"earth imaging"},
                      {"navigation"},
                      {"telecommunication & earth imaging & navigation",
                       {2, 3, 4}}}),
                leaf("B442", "satellite functions",
                     {{"none"}, {"satellite roaming"}})})}),
  };
  return ComponentTree::from_root(std::move(root));
}

/// S1G..S7G over builtin_model().
inline std::vector<Configuration> builtin_generations() {
  using detail::config;
  const char* t = kWirelessModelId;
  return {
      config("S1G", t, {"B11_1", "B12_1", "B21_1", "B22_1", "B31_1", "B32_3",
                        "B41_1", "B42_1", "B43_1", "B441_1", "B442_1"}),
      config("S2G", t, {"B11_2", "B12_3", "B21_5", "B22_1", "B31_2", "B32_4",
                        "B41_3", "B42_1", "B43_1", "B441_1", "B442_1"}),
      config("S3G", t, {"B11_4", "B12_2", "B21_6", "B22_1", "B31_3", "B32_5",
                        "B41_4", "B42_1", "B43_1", "B441_1", "B442_1"}),
      config("S4G", t, {"B11_5", "B12_4", "B21_7", "B22_1", "B31_4", "B32_5",
                        "B41_5", "B42_3", "B43_1", "B441_1", "B442_1"}),
      config("S5G", t, {"B11_6", "B12_4", "B21_8", "B22_2", "B31_5", "B32_5",
                        "B41_5", "B42_3", "B43_2", "B441_1", "B442_1"}),
      config("S6G", t, {"B11_6", "B12_4", "B21_9", "B22_2", "B31_6", "B32_8",
                        "B41_8", "B42_3", "B43_2", "B441_5", "B442_1"}),
      config("S7G", t, {"B11_6", "B12_4", "B21_9", "B22_2", "B31_6", "B32_8",
                        "B41_8", "B42_3", "B43_2", "B441_5", "B442_2"}),
  };
}

/// Reference improved 5G systems: after stage 1 and after stage 2.
inline std::vector<Configuration> reference_improvements() {
  using detail::config;
  const char* t = kWirelessModelId;
  return {
      config("S5G_adv1", t,
             {"B11_6", "B12_4", "B21_9", "B22_2", "B31_6", "B32_7", "B41_7",
              "B42_3", "B43_2", "B441_2", "B442_1"}),
      config("S5G_adv2", t,
             {"B11_6", "B12_4", "B21_9", "B22_2", "B31_6", "B32_8", "B41_8",
              "B42_3", "B43_2", "B441_3", "B442_1"}),
  };
}

/// Generations followed by the reference improvements, looked up by id.
inline std::optional<Configuration> find_configuration(std::string_view id) {
  for (auto& c : builtin_generations())
    if (c.id == id) return c;
  for (auto& c : reference_improvements())
    if (c.id == id) return c;
  return std::nullopt;
}

struct BuiltinStages {
  StagePlan stage1;
  StagePlan stage2;
};

/// Stage 1: S5G -> S5G_adv1, 5 groups / 17 operations, budget 19.0.
/// Stage 2: S5G_adv1 -> S5G_adv2, 4 groups / 10 operations, budget 17.5.
/// Stage 2 operations are authored against the stage-1 outcome (B32_7,
/// B41_7, B441_2).
inline BuiltinStages builtin_stage_plans() {
  using detail::group;
  BuiltinStages s;
  s.stage1.stage_id = "stage1";
  s.stage1.budget = parse_tenths("19.0");
  s.stage1.comparator = Comparator::kInclusive;
  s.stage1.solver = SolverKind::kDp;
  s.stage1.result_id = "S5G_adv1";
  s.stage1.groups = {
      group("U", 1, "B21", "B21_8", {{"B21_9", "2.0", "3.0"}}),
      group("U", 2, "B31", "B31_5", {{"B31_6", "4.0", "5.0"}}),
      group("U", 3, "B32", "B32_5",
            {{"B32_6", "1.0", "2.0"},
             {"B32_7", "3.6", "4.0"},
             {"B32_8", "3.6", "6.0"}}),
      group("U", 4, "B41", "B41_5",
            {{"B41_6", "3.6", "6.0"},
             {"B41_7", "7.0", "7.0"},
             {"B41_8", "9.0", "12.0"}}),
      group("U", 5, "B441", "B441_1",
            {{"B441_2", "5.0", "5.0"},
             {"B441_3", "5.6", "7.0"},
             {"B441_4", "6.0", "8.0"},
             {"B441_5", "14.0", "20.0"}}),
  };

  s.stage2.stage_id = "stage2";
  // Inclusive: the reference stage-2 selection costs exactly 17.5.
  s.stage2.budget = parse_tenths("17.5");
  s.stage2.comparator = Comparator::kInclusive;
  s.stage2.solver = SolverKind::kDp;
  s.stage2.result_id = "S5G_adv2";
  s.stage2.groups = {
      group("V", 1, "B32", "B32_7", {{"B32_8", "4.5", "4.0"}}),
      group("V", 2, "B41", "B41_7", {{"B41_8", "6.5", "7.0"}}),
      group("V", 3, "B441", "B441_2",
            {{"B441_3", "6.0", "6.5"},
             {"B441_4", "6.5", "7.5"},
             {"B441_5", "11.0", "18.0"}}),
      group("V", 4, "B442", "B442_1", {{"B442_2", "12.0", "30.0"}}),
  };
  return s;
}

/// A selection stated for a stage by an external source, checked against the
/// computed result when rendering a strategy.
struct ReferenceClaim {
  std::string stage_id;
  std::vector<std::string> operation_ids;
  std::optional<Configuration> result;
  std::string note;

  friend bool operator==(const ReferenceClaim&, const ReferenceClaim&) = default;
};

/// Reference selections of the 5G two-stage example. The stage-1 one costs
/// 24.0 against a 19.0 budget, so it is only reported as a discrepancy.
inline std::vector<ReferenceClaim> reference_claims() {
  const auto refs = reference_improvements();
  return {
      {"stage1",
       {"U1_2", "U2_2", "U3_3", "U4_3", "U5_2"},
       refs[0],
       "reference stage-1 selection; its last factor appears as U6_2 and is "
       "read as U5_2 (only groups 1-5 exist)"},
      {"stage2", {"V1_2", "V2_2", "V3_2"}, refs[1], "reference stage-2 selection"},
  };
}

struct ActivityCatalogEntry {
  std::string id;
  std::string description;
  std::string source_row;

  friend bool operator==(const ActivityCatalogEntry&,
                         const ActivityCatalogEntry&) = default;
};

/// Generated improvement activities O_1..O_17. Reference metadata only: no
/// estimates exist for them, so they take part in no optimization.
inline std::vector<ActivityCatalogEntry> activity_catalog() {
  return {
      {"O_1",
       "Implementation of central architecture: cloud radio-access networks "
       "(RAN) based on SDR and coordinated central controllers",
       "1.1"},
      {"O_2",
       "Implementation of central architecture: cloud basic networks CN "
       "based on SDN",
       "1.2"},
      {"O_3", "Multidimensional antennas MIMO", "2"},
      {"O_4", "Flexible common usage of frequency resources", "3.1"},
      {"O_5",
       "Terminal and network heterogeneity (different types of access "
       "networks, e.g., WiMAX, WiFi, UMTS)",
       "3.2"},
      {"O_6",
       "Allocation and management of resources in heterogeneous networks",
       "3.3"},
      {"O_7",
       "Inter-network joint work for different radio-access technologies",
       "3.4"},
      {"O_8", "Self-adaptation and self-optimization networks", "3.5"},
      {"O_9", "Smart homes, smart cities, smart villages", "3.6"},
      {"O_10", "Device-centric architectures", "4"},
      {"O_11", "Very wide area coverage", "5"},
      {"O_12",
       "User personalization (high data transfer rates, access to large "
       "repository of data and services, flexibility)",
       "6"},
      {"O_13",
       "Interoperability (unified global standard, global mobility and "
       "service portability, i.e., different services from different "
       "service providers)",
       "7"},
      {"O_14",
       "Network convergence (convergence with both devices and services)",
       "8"},
      {"O_15", "Lower power consumption", "9"},
      {"O_16", "Ultra fast access of Internet", "10"},
      {"O_17", "Satellite to satellite communication", "11"},
  };
}

/// Three-layer enterprise network: S = A(E, T) * D(M(R, F, Q), B) * C(H, K).
/// Each leaf gets two placeholder alternatives; structural tests only.
inline ComponentTree enterprise_model() {
  using detail::composite;
  using detail::leaf;
  const auto two = [](const std::string& id, const std::string& label) {
    return leaf(id, label, {{label + " (option 1)"}, {label + " (option 2)"}});
  };
  CompositeNode root{"S", "three-layer enterprise network", {}};
  root.children = {
      composite("A", "access layer",
                {two("E", "client nodes"), two("T", "connections")}),
      composite("D", "distribution layer",
                {composite("M", "management",
                           {two("R", "routing"), two("F", "filtering"),
                            two("Q", "QoS policies")}),
                 two("B", "branch-office WAN connections")}),
      composite("C", "core layer",
                {two("H",
                     "highest-speed connections between distribution-layer "
                     "devices"),
                 two("K", "core network topology")}),
  };
  return ComponentTree::from_root(std::move(root));
}

struct Fixtures {
  ComponentTree enterprise;
  std::vector<ActivityCatalogEntry> activities;
};

inline Fixtures builtin_fixtures() {
  return {enterprise_model(), activity_catalog()};
}

}  // namespace morphplan::datasets

#endif  // MORPHPLAN_DATASETS_HPP
