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

#ifndef MORPHPLAN_REPORT_HPP
#define MORPHPLAN_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "morphplan/datasets.hpp"
#include "morphplan/interchange.hpp"
#include "morphplan/planner.hpp"

namespace morphplan {

inline constexpr const char* kStrategyFormat = "morphplan-strategy/1";

/// profit/cost rounded half-up to three decimals; "inf" for zero cost.
inline std::string format_ratio(Tenths profit, Tenths cost) {
  if (cost == Tenths(0)) return "inf";
  const std::int64_t p = profit.raw();
  const std::int64_t c = cost.raw();
  const std::int64_t milli = (2 * p * 1000 + c) / (2 * c);
  std::string frac = std::to_string(milli % 1000);
  frac.insert(0, 3 - frac.size(), '0');
  return std::to_string(milli / 1000) + "." + frac;
}

/// Discrepancy notes for one stage against an externally stated selection
/// and result.
inline std::vector<std::string> annotate_stage(
    const ComponentTree& tree, const StageResult& stage,
    const datasets::ReferenceClaim& claim) {
  std::vector<std::string> out;
  std::vector<ItemRef> picks;
  std::string listed;
  bool unknown = false;
  for (const auto& id : claim.operation_ids) {
    listed += (listed.empty() ? "" : ",") + id;
    const auto ref = find_operation(stage.plan.groups, id);
    if (!ref) {
      out.push_back("reference selection names unknown operation " + id);
      unknown = true;
      continue;
    }
    picks.push_back(*ref);
  }
  if (!unknown) {
    const Findings f = verify_assignment(stage.instance, picks);
    Tenths profit;
    for (const auto& r : picks)
      profit += stage.instance.groups[r.group][r.item].profit;
    if (!f.empty()) {
      out.push_back("reference selection {" + listed +
                    "} is infeasible: " + join_findings(f));
    } else {
      std::vector<ItemRef> computed;
      for (std::size_t g = 0; g < stage.solution.selection.size(); ++g)
        if (stage.solution.selection[g])
          computed.push_back({g, *stage.solution.selection[g]});
      std::sort(picks.begin(), picks.end());
      if (picks == computed)
        out.push_back("computed selection matches reference selection {" +
                      listed + "}");
      else
        out.push_back("reference selection {" + listed +
                      "} is feasible with profit " + format_tenths(profit) +
                      "; computed profit " +
                      format_tenths(stage.solution.total_profit));
    }
  }
  if (claim.result) {
    const auto deltas = diff_configurations(
        tree, *claim.result, stage.resulting_configuration);
    if (deltas.empty()) {
      out.push_back("resulting configuration matches reference " +
                    claim.result->id);
    } else {
      std::string where;
      for (const auto& d : deltas)
        where += (where.empty() ? "" : ", ") + d.leaf + " (computed " +
                 d.to_alt + ", reference " + d.from_alt + ")";
      out.push_back("resulting configuration differs from reference " +
                    claim.result->id + " at " + where);
    }
  }
  if (!claim.note.empty()) out.push_back("note: " + claim.note);
  return out;
}

/// Machine-readable strategy report. Deterministic in its inputs.
inline Json render_strategy(
    const ComponentTree& tree, const Strategy& strategy,
    std::span<const datasets::ReferenceClaim> claims = {}) {
  const auto expr = [&](const Configuration& c) {
    return Json{{"id", c.id}, {"expression", render_configuration(tree, c)}};
  };
  Json doc;
  doc["format"] = kStrategyFormat;
  doc["model"] = tree.id();
  doc["chain"] = chain_string(strategy);
  doc["status"] = strategy.ok() ? "ok" : "failed";
  const bool initial_ok = validate_configuration(tree, strategy.initial).empty();
  doc["initial"] = initial_ok ? expr(strategy.initial)
                              : Json{{"id", strategy.initial.id}};

  Json stages = Json::array();
  for (const auto& st : strategy.stages) {
    Json sj;
    sj["stage_id"] = st.stage_id();
    sj["input"] = st.input.id;
    sj["budget"] = format_tenths(st.plan.budget);
    sj["comparator"] = to_string(st.plan.comparator);
    sj["solver"] = to_string(st.plan.solver);
    sj["group_sizes"] = group_sizes(st.plan.groups);

    Json groups = Json::array();
    Json indicators = Json::array();
    Json selection = Json::array();
    for (std::size_t g = 0; g < st.plan.groups.size(); ++g) {
      const auto& group = st.plan.groups[g];
      const auto& pick = st.solution.selection[g];
      Json items = Json::array();
      Json x = Json::array();
      for (std::size_t j = 0; j < group.members.size(); ++j) {
        const auto& op = group.members[j];
        Json oj;
        oj["id"] = op.id;
        oj["from"] = op.from_alt;
        oj["to"] = op.to_alt ? Json(*op.to_alt) : Json(nullptr);
        oj["profit"] = format_tenths(op.profit);
        oj["cost"] = format_tenths(op.cost);
        if (op.impact_class) oj["impact_class"] = to_string(*op.impact_class);
        if (!op.activity_refs.empty()) oj["activity_refs"] = op.activity_refs;
        items.push_back(std::move(oj));
        // An unselected group is read as choosing its None-marker.
        const bool chosen = pick ? *pick == j : op.is_none();
        x.push_back(chosen ? 1 : 0);
      }
      groups.push_back(Json{{"group", group.index},
                            {"leaf", group.leaf},
                            {"items", std::move(items)}});
      indicators.push_back(std::move(x));
      selection.push_back(pick ? Json(group.members[*pick].id) : Json(nullptr));
    }
    sj["groups"] = std::move(groups);

    if (!st.greedy_trace.empty()) {
      Json trace = Json::array();
      int rank = 0;
      for (const auto& step : st.greedy_trace) {
        trace.push_back(Json{
            {"rank", ++rank},
            {"operation",
             st.plan.groups[step.item.group].members[step.item.item].id},
            {"ratio", format_ratio(step.profit, step.cost)},
            {"profit", format_tenths(step.profit)},
            {"cost", format_tenths(step.cost)},
            {"outcome", to_string(step.outcome)},
            {"load", format_tenths(step.load_after)}});
      }
      sj["greedy_trace"] = std::move(trace);
    }

    sj["selection"] = std::move(selection);
    Json chosen = Json::array();
    for (const auto& op : st.selected_operations) chosen.push_back(op.id);
    sj["selected_operations"] = std::move(chosen);
    sj["indicators"] = std::move(indicators);
    sj["profit"] = format_tenths(st.solution.total_profit);
    sj["cost"] = format_tenths(st.solution.total_cost);
    sj["result"] = expr(st.resulting_configuration);

    Json changes = Json::array();
    for (const auto& d :
         diff_configurations(tree, st.input, st.resulting_configuration))
      changes.push_back(Json{{"leaf", d.leaf}, {"from", d.from_alt},
                             {"to", d.to_alt}});
    sj["changes"] = std::move(changes);

    Json notes = Json::array();
    if (st.selected_operations.empty())
      notes.push_back("no operations selected");
    for (const auto& claim : claims)
      if (claim.stage_id == st.stage_id())
        for (auto& n : annotate_stage(tree, st, claim))
          notes.push_back(std::move(n));
    sj["annotations"] = std::move(notes);
    stages.push_back(std::move(sj));
  }
  doc["stages"] = std::move(stages);
  if (initial_ok) doc["final"] = expr(strategy.final_configuration);
  if (strategy.failure)
    doc["failure"] = Json{{"stage_id", strategy.failure->stage_id},
                          {"kind", strategy.failure->kind},
                          {"message", strategy.failure->message}};
  return doc;
}

namespace detail {

struct TextStyle {
  bool enabled = false;
  std::string bold(const std::string& s) const {
    return enabled ? "\x1b[1m" + s + "\x1b[0m" : s;
  }
};

inline std::string pad(const std::string& s, std::size_t width,
                       bool right = false) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

inline std::string render_table(
    const std::vector<std::vector<std::string>>& rows,
    const std::vector<bool>& right_aligned, const std::string& indent) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      const bool right = c < right_aligned.size() && right_aligned[c];
      line += c + 1 == row.size() && !right ? row[c]
                                             : pad(row[c], width[c], right);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace detail

/// Aligned plain-text rendering of a report produced by render_strategy.
inline std::string render_strategy_text(const Json& report,
                                        bool styled = false) {
  const detail::TextStyle style{styled};
  std::ostringstream out;
  out << style.bold("Strategy " + report.at("chain").get<std::string>())
      << "  [" << report.at("status").get<std::string>() << "]\n";
  out << "model " << report.at("model").get<std::string>() << "\n";
  const auto& initial = report.at("initial");
  out << "initial " << initial.at("id").get<std::string>();
  if (initial.contains("expression"))
    out << ": " << initial.at("expression").get<std::string>();
  out << "\n";

  for (const auto& st : report.at("stages")) {
    out << "\n"
        << style.bold("Stage " + st.at("stage_id").get<std::string>()) << "  input "
        << st.at("input").get<std::string>() << "  budget "
        << st.at("budget").get<std::string>() << " ("
        << st.at("comparator").get<std::string>() << ")  solver "
        << st.at("solver").get<std::string>() << "\n";

    std::vector<std::vector<std::string>> rows{
        {"group", "leaf", "operation", "change", "profit", "cost", "x"}};
    const auto& groups = st.at("groups");
    const auto& indicators = st.at("indicators");
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto& items = groups[g].at("items");
      for (std::size_t j = 0; j < items.size(); ++j) {
        const auto& it = items[j];
        const std::string change =
            it.at("to").is_null()
                ? "None"
                : it.at("from").get<std::string>() + " -> " +
                      it.at("to").get<std::string>();
        rows.push_back({j == 0 ? std::to_string(groups[g].at("group").get<int>())
                               : "",
                        j == 0 ? groups[g].at("leaf").get<std::string>() : "",
                        it.at("id").get<std::string>(), change,
                        it.at("profit").get<std::string>(),
                        it.at("cost").get<std::string>(),
                        std::to_string(indicators[g][j].get<int>())});
      }
    }
    out << detail::render_table(rows,
                                {false, false, false, false, true, true, true},
                                "  ");

    if (st.contains("greedy_trace")) {
      out << "  greedy order:\n";
      std::vector<std::vector<std::string>> trace{
          {"rank", "operation", "ratio", "profit", "cost", "load", "outcome"}};
      for (const auto& step : st.at("greedy_trace"))
        trace.push_back({std::to_string(step.at("rank").get<int>()),
                         step.at("operation").get<std::string>(),
                         step.at("ratio").get<std::string>(),
                         step.at("profit").get<std::string>(),
                         step.at("cost").get<std::string>(),
                         step.at("load").get<std::string>(),
                         step.at("outcome").get<std::string>()});
      out << detail::render_table(
          trace, {true, false, true, true, true, true, false}, "    ");
    }

    std::string selected;
    for (const auto& id : st.at("selected_operations"))
      selected += (selected.empty() ? "" : " ") + id.get<std::string>();
    out << "  selected: " << (selected.empty() ? "(none)" : selected)
        << "   profit " << st.at("profit").get<std::string>() << "   cost "
        << st.at("cost").get<std::string>() << "\n";
    const auto& result = st.at("result");
    out << "  result " << result.at("id").get<std::string>() << ": "
        << result.at("expression").get<std::string>() << "\n";
    for (const auto& note : st.at("annotations"))
      out << "  * " << note.get<std::string>() << "\n";
  }

  if (report.contains("final")) {
    const auto& fin = report.at("final");
    out << "\nfinal " << fin.at("id").get<std::string>() << ": "
        << fin.at("expression").get<std::string>() << "\n";
  }
  if (report.contains("failure")) {
    const auto& f = report.at("failure");
    out << "\nFAILED at stage " << f.at("stage_id").get<std::string>() << ": "
        << f.at("message").get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace morphplan

#endif  // MORPHPLAN_REPORT_HPP
