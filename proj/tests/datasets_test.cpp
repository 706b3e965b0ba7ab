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

#include "morphplan/datasets.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "morphplan/cli.hpp"
#include "morphplan/interchange.hpp"

namespace morphplan {
namespace {

namespace fs = std::filesystem;

TEST(WirelessModelTest, Shape) {
  const auto tree = datasets::builtin_model();
  EXPECT_EQ(tree.id(), "S");
  ASSERT_EQ(tree.leaves().size(), 11u);
  EXPECT_EQ(tree.alternative_count(), 55u);
  EXPECT_EQ(tree.find_leaf("B11")->alternatives.size(), 6u);
  EXPECT_EQ(tree.find_leaf("B21")->alternatives.size(), 9u);
  EXPECT_EQ(tree.find_leaf("B32")->alternatives.size(), 8u);
  EXPECT_EQ(tree.find_leaf("B441")->alternatives.size(), 5u);
  EXPECT_EQ(tree.find_leaf("B442")->alternatives.size(), 2u);
  EXPECT_EQ(tree.depth(), 4);
  EXPECT_TRUE(check_tree(tree.root()).empty());
}

TEST(WirelessModelTest, CompositionAndLabels) {
  const auto tree = datasets::builtin_model();
  const auto* b32 = tree.find_leaf("B32");
  ASSERT_NE(b32, nullptr);
  const auto* b32_8 = b32->find("B32_8");
  ASSERT_NE(b32_8, nullptr);
  EXPECT_EQ(b32_8->composed_of, (std::vector<std::string>{"B32_6", "B32_7"}));
  const auto* b442 = tree.find_leaf("B442");
  ASSERT_NE(b442, nullptr);
  EXPECT_EQ(b442->find("B442_1")->label, "none");
  EXPECT_EQ(b442->find("B442_2")->label, "satellite roaming");
  EXPECT_EQ(tree.root().children.size(), 4u);
}

TEST(WirelessModelTest, GenerationsAreValid) {
  const auto tree = datasets::builtin_model();
  const auto gens = datasets::builtin_generations();
  ASSERT_EQ(gens.size(), 7u);
  for (const auto& c : gens) EXPECT_TRUE(validate_configuration(tree, c).empty()) << c.id;
  for (const auto& c : datasets::reference_improvements())
    EXPECT_TRUE(validate_configuration(tree, c).empty()) << c.id;
  EXPECT_EQ(*gens[1].at("B41"), "B41_3");
  EXPECT_EQ(diff_configurations(tree, gens[5], gens[6]).size(), 1u);
  EXPECT_FALSE(datasets::find_configuration("S8G").has_value());
}

TEST(StagePlansTest, Contents) {
  const auto tree = datasets::builtin_model();
  const auto p = datasets::builtin_stage_plans();
  EXPECT_EQ(group_sizes(p.stage1.groups),
            (std::vector<std::size_t>{2, 2, 4, 4, 5}));
  EXPECT_EQ(group_sizes(p.stage2.groups),
            (std::vector<std::size_t>{2, 2, 4, 2}));
  EXPECT_EQ(p.stage1.budget, Tenths(190));
  EXPECT_EQ(p.stage2.budget, Tenths(175));

  const auto u55 = find_operation(p.stage1.groups, "U5_5");
  ASSERT_TRUE(u55);
  const auto& op = p.stage1.groups[u55->group].members[u55->item];
  EXPECT_EQ(op.profit, Tenths(140));
  EXPECT_EQ(op.cost, Tenths(200));
  EXPECT_EQ(op.to_alt, "B441_5");
  const auto v42 = find_operation(p.stage2.groups, "V4_2");
  ASSERT_TRUE(v42);
  EXPECT_EQ(p.stage2.groups[v42->group].members[v42->item].profit, Tenths(120));
  EXPECT_EQ(p.stage2.groups[v42->group].members[v42->item].cost, Tenths(300));

  EXPECT_TRUE(check_group_set(p.stage1.groups).empty());
  EXPECT_TRUE(check_group_set(p.stage2.groups).empty());
  for (const auto& g : p.stage1.groups) {
    EXPECT_TRUE(validate_group(tree, g).empty());
    EXPECT_TRUE(g.members.front().is_none());
  }
  for (const auto& g : p.stage2.groups) EXPECT_TRUE(validate_group(tree, g).empty());

  // Every operation is authored against the stage's input configuration.
  const auto s5g = *datasets::find_configuration("S5G");
  const auto adv1 = *datasets::find_configuration("S5G_adv1");
  for (const auto& g : p.stage1.groups)
    for (const auto& o : g.members) EXPECT_EQ(*s5g.at(o.leaf), o.from_alt) << o.id;
  for (const auto& g : p.stage2.groups)
    for (const auto& o : g.members) EXPECT_EQ(*adv1.at(o.leaf), o.from_alt) << o.id;
}

TEST(EnterpriseModelTest, Shape) {
  const auto tree = datasets::enterprise_model();
  EXPECT_EQ(tree.leaves().size(), 8u);
  EXPECT_EQ(tree.depth(), 4);
  std::vector<std::string> order;
  for (const auto& l : tree.leaves()) order.push_back(l.id);
  EXPECT_EQ(order, (std::vector<std::string>{"E", "T", "R", "F", "Q", "B", "H",
                                             "K"}));
}

TEST(ActivityCatalogTest, Integrity) {
  const auto cat = datasets::activity_catalog();
  ASSERT_EQ(cat.size(), 17u);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    EXPECT_EQ(cat[i].id, "O_" + std::to_string(i + 1));
    EXPECT_FALSE(cat[i].description.empty());
    ids.insert(cat[i].id);
  }
  EXPECT_EQ(ids.size(), 17u);
  EXPECT_EQ(cat.back().description, "Satellite to satellite communication");
  EXPECT_EQ(datasets::builtin_fixtures().activities, cat);
}

TEST(ReferenceClaimsTest, StageOneClaimIsOverBudget) {
  const auto claims = datasets::reference_claims();
  ASSERT_EQ(claims.size(), 2u);
  const auto p = datasets::builtin_stage_plans();
  const auto inst = build_mckp_instance(p.stage1.groups, p.stage1.budget,
                                        p.stage1.comparator);
  std::vector<ItemRef> picks;
  for (const auto& id : claims[0].operation_ids)
    picks.push_back(*find_operation(p.stage1.groups, id));
  EXPECT_EQ(verify_assignment(inst, picks),
            (Findings{"budget exceeded: 24.0 > 19.0"}));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(ExportTest, MatchesShippedDataAndReparses) {
  const fs::path dir = fs::temp_directory_path() / "morphplan_export_test";
  fs::remove_all(dir);
  const auto written = cli::detail::export_datasets(dir);
  EXPECT_EQ(written.size(), 17u);
  const fs::path shipped = fs::path(MORPHPLAN_SOURCE_DIR) / "data";
  for (const auto& rel : written) {
    const std::string text = slurp(dir / rel);
    EXPECT_EQ(text, slurp(shipped / rel)) << rel;
    EXPECT_EQ(text, slurp(dir / rel));
  }
  const auto tree = io::parse_model(slurp(dir / "wireless.json"));
  EXPECT_EQ(tree, datasets::builtin_model());
  EXPECT_EQ(io::parse_model(slurp(dir / "enterprise.json")),
            datasets::enterprise_model());
  EXPECT_EQ(io::parse_stage_plan(io::parse_text(slurp(dir / "table8.json"))),
            datasets::builtin_stage_plans().stage1);
  EXPECT_EQ(io::parse_configuration(
                io::parse_text(slurp(dir / "configs/S5G.json"))),
            *datasets::find_configuration("S5G"));
  fs::remove_all(dir);
}

}  // namespace
}  // namespace morphplan
