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

#include "morphplan/interchange.hpp"

#include <random>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "morphplan/datasets.hpp"
#include "test_support.hpp"

namespace morphplan {
namespace {

using ::testing::HasSubstr;

std::string schema_message(const Json& doc, StagePlan (*parse)(const Json&)) {
  try {
    parse(doc);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

Json minimal_plan() {
  return Json::parse(R"({
    "stage_id": "s",
    "budget": "5.0",
    "groups": [
      {"group": 1, "leaf": "B21", "operations": [
        {"id": "n", "from": "B21_8", "to": null, "profit": "0.0", "cost": "0.0"},
        {"id": "u", "from": "B21_8", "to": "B21_9", "profit": "2.0", "cost": "3.0",
         "impact_class": "local-node", "activity_refs": ["O_16"]}
      ]}
    ]
  })");
}

TEST(StagePlanDocumentTest, DefaultsAndOptionalFields) {
  const auto plan = io::parse_stage_plan(minimal_plan());
  EXPECT_EQ(plan.comparator, Comparator::kInclusive);
  EXPECT_EQ(plan.solver, SolverKind::kDp);
  EXPECT_TRUE(plan.result_id.empty());
  ASSERT_EQ(plan.groups.size(), 1u);
  const auto& op = plan.groups[0].members[1];
  EXPECT_EQ(op.group, 1);
  EXPECT_EQ(op.leaf, "B21");
  EXPECT_EQ(op.impact_class, ImpactClass::kLocalNode);
  EXPECT_EQ(op.activity_refs, (std::vector<std::string>{"O_16"}));
  EXPECT_TRUE(plan.groups[0].members[0].is_none());
  EXPECT_EQ(io::parse_stage_plan(io::serialize_stage_plan(plan)), plan);
}

TEST(StagePlanDocumentTest, SchemaViolationsNameTheirPath) {
  auto doc = minimal_plan();
  doc["groups"][0]["operations"][1].erase("to");
  EXPECT_EQ(schema_message(doc, io::parse_stage_plan),
            "schema violation at /groups/0/operations/1: missing field \"to\"");

  doc = minimal_plan();
  doc["groups"][0]["operations"][1]["cost"] = "3.25";
  EXPECT_THAT(schema_message(doc, io::parse_stage_plan),
              HasSubstr("/groups/0/operations/1/cost"));

  doc = minimal_plan();
  doc["groups"][0]["operations"][1]["profit"] = 2.0;
  EXPECT_THAT(schema_message(doc, io::parse_stage_plan),
              HasSubstr("expected decimal string"));

  doc = minimal_plan();
  doc["comparator"] = "strict";
  EXPECT_THAT(schema_message(doc, io::parse_stage_plan), HasSubstr("/comparator"));

  doc = minimal_plan();
  doc["groups"][0]["operations"][1]["impact_class"] = "huge";
  EXPECT_THAT(schema_message(doc, io::parse_stage_plan),
              HasSubstr("unknown impact class"));

  EXPECT_THAT(schema_message(Json::array(), io::parse_stage_plan),
              HasSubstr("schema violation at /: expected object"));
}

TEST(StagePlanDocumentTest, BuiltinPlansRoundTrip) {
  const auto p = datasets::builtin_stage_plans();
  for (const auto& plan : {p.stage1, p.stage2}) {
    const std::string text = io::to_text(io::serialize_stage_plan(plan));
    EXPECT_EQ(io::parse_stage_plan(io::parse_text(text)), plan);
  }
}

TEST(InstanceDocumentTest, BareInstanceUsesPositionalIds) {
  const auto doc = io::parse_instance_document(Json::parse(R"({
    "budget": "1.0", "comparator": "exclusive",
    "groups": [[{"profit": "1.0", "cost": "0.5"}], [{"profit": "2.0", "cost": "0.4"},
               {"profit": "3.0", "cost": "0.9"}]]
  })"));
  EXPECT_FALSE(doc.plan.has_value());
  EXPECT_EQ(doc.instance.comparator, Comparator::kExclusive);
  EXPECT_EQ(doc.item_id({1, 1}), "x2_2");
  EXPECT_EQ(doc.find_item("x2_1"), (ItemRef{1, 0}));
  EXPECT_FALSE(doc.find_item("x3_1").has_value());
}

TEST(InstanceDocumentTest, OperationSetBuildsInstance) {
  const auto doc = io::parse_instance_document(
      io::serialize_stage_plan(datasets::builtin_stage_plans().stage2));
  ASSERT_TRUE(doc.plan.has_value());
  EXPECT_EQ(doc.instance.groups.size(), 4u);
  EXPECT_EQ(doc.find_item("V3_2"), (ItemRef{2, 1}));
  EXPECT_EQ(doc.item_id({3, 1}), "V4_2");
}

TEST(InstanceDocumentTest, MalformedJson) {
  EXPECT_THROW(io::parse_text("{\"budget\": "), SchemaError);
  EXPECT_THROW(io::parse_instance(Json::parse(R"({"budget": "1.0",
      "comparator": "inclusive", "groups": [[{"profit": "1.0"}]]})")),
               SchemaError);
}

TEST(SolutionDocumentTest, OneBasedSelectionRoundTrip) {
  MckpSolution s;
  s.selection = {2, std::nullopt, 0};
  s.total_profit = Tenths(55);
  s.total_cost = Tenths(40);
  s.solver = SolverKind::kExhaustive;
  const Json j = io::serialize_solution(s);
  EXPECT_EQ(j["selection"], Json::parse("[3, null, 1]"));
  EXPECT_FALSE(j.contains("selected"));
  EXPECT_EQ(io::parse_solution(j), s);

  Json bad = j;
  bad["selection"][0] = 0;
  EXPECT_THROW(io::parse_solution(bad), SchemaError);
}

TEST(ChainDocumentTest, RoundTrip) {
  const io::ChainDocument c{"wireless.json", "S5G", {"a.json", "b.json"}};
  const auto back = io::parse_chain(io::serialize_chain(c));
  EXPECT_EQ(back.model, c.model);
  EXPECT_EQ(back.initial, c.initial);
  EXPECT_EQ(back.stages, c.stages);
  EXPECT_THROW(io::parse_chain(Json::parse(R"({"model": "m", "initial": "i",
      "stages": [1]})")),
               SchemaError);
}

TEST(InterchangePropertyTest, InstanceRoundTrip) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const auto inst = testing::random_instance(rng);
    const std::string text = io::to_text(io::serialize_instance(inst));
    const auto back = io::parse_instance(io::parse_text(text));
    ASSERT_EQ(back, inst);
    ASSERT_EQ(io::to_text(io::serialize_instance(back)), text);
  }
}

}  // namespace
}  // namespace morphplan
