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

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in-process.
//
// Exit codes: 0 success, 1 validation findings, 2 usage or I/O error,
// 3 infeasible selection or solver error.

#ifndef MORPHPLAN_CLI_HPP
#define MORPHPLAN_CLI_HPP

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morphplan/datasets.hpp"
#include "morphplan/interchange.hpp"
#include "morphplan/planner.hpp"
#include "morphplan/report.hpp"

namespace morphplan::cli {

enum ExitCode : int {
  kOk = 0,
  kFindings = 1,
  kUsage = 2,
  kInfeasible = 3,
};

struct Environment {
  bool no_color = false;         // MORPHPLAN_NO_COLOR is set
  bool stdout_is_terminal = false;
};

class IoError : public Error {
 public:
  using Error::Error;
};

namespace detail {

namespace fs = std::filesystem;

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const fs::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

inline Json load_json(const fs::path& path) {
  return io::parse_text(read_file(path));
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// A "*.json" reference is read from disk (relative to `base`); anything
/// else names a built-in configuration.
inline Configuration resolve_configuration(const std::string& ref,
                                           const ComponentTree& tree,
                                           const fs::path& base = {}) {
  if (ref.size() > 5 && ref.ends_with(".json"))
    return io::parse_configuration(load_json(base / ref));
  auto builtin = datasets::find_configuration(ref);
  if (!builtin || builtin->tree_id != tree.id())
    throw IoError("unknown configuration \"" + ref +
                  "\" (not a .json file nor a built-in configuration of "
                  "model " + tree.id() + ")");
  return *builtin;
}

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

inline int fail(Streams s, int code, const std::string& kind,
                const std::string& message, const Findings& findings = {}) {
  Json doc;
  doc["status"] = "error";
  doc["kind"] = kind;
  doc["message"] = message;
  if (!findings.empty()) doc["findings"] = findings;
  s.out << io::to_text(doc);
  s.err << "morphplan: " << message << "\n";
  return code;
}

// --- commands --------------------------------------------------------------

inline int cmd_validate(Streams s, const std::string& model_path,
                        const std::vector<std::string>& config_paths) {
  const std::string text = read_file(model_path);
  Json doc;
  doc["file"] = model_path;
  std::optional<ComponentTree> tree;
  Findings model_findings;
  try {
    tree = io::parse_model(text);
  } catch (const ValidationError& e) {
    model_findings = e.findings().empty() ? Findings{e.what()} : e.findings();
  } catch (const SchemaError& e) {
    model_findings = {e.what()};
  }
  bool clean = model_findings.empty();
  doc["model"] = tree ? Json(tree->id()) : Json(nullptr);
  doc["findings"] = model_findings;
  Json configs = Json::array();
  for (const auto& path : config_paths) {
    const std::string ctext = read_file(path);
    Json cj;
    cj["file"] = path;
    Findings f;
    try {
      const Configuration c = io::parse_configuration(io::parse_text(ctext));
      cj["id"] = c.id;
      if (tree)
        f = validate_configuration(*tree, c);
      else
        f = {"model is invalid; configuration not checked"};
    } catch (const SchemaError& e) {
      cj["id"] = nullptr;
      f = {e.what()};
    }
    clean = clean && f.empty();
    cj["findings"] = f;
    configs.push_back(std::move(cj));
  }
  doc["configurations"] = std::move(configs);
  doc["valid"] = clean;
  s.out << io::to_text(doc);
  if (!clean) s.err << "morphplan: validation findings reported\n";
  return clean ? kOk : kFindings;
}

inline int cmd_diff(Streams s, const std::string& model_path,
                    const std::string& from_ref, const std::string& to_ref) {
  const ComponentTree tree = io::parse_model(read_file(model_path));
  const Configuration from = resolve_configuration(from_ref, tree);
  const Configuration to = resolve_configuration(to_ref, tree);
  const auto deltas = diff_configurations(tree, from, to);
  Json doc;
  doc["model"] = tree.id();
  doc["from"] = from.id;
  doc["to"] = to.id;
  Json list = Json::array();
  for (const auto& d : deltas)
    list.push_back(Json{{"leaf", d.leaf}, {"from", d.from_alt}, {"to", d.to_alt}});
  doc["deltas"] = std::move(list);
  s.out << io::to_text(doc);
  return kOk;
}

inline int cmd_solve(Streams s, const std::string& instance_path,
                     const std::string& solver_name) {
  const auto solver = parse_solver(solver_name);
  if (!solver) throw IoError("unknown solver " + solver_name);
  const io::InstanceDocument doc =
      io::parse_instance_document(load_json(instance_path));
  const MckpSolution sol = solve(doc.instance, *solver);
  s.out << io::to_text(io::serialize_solution(sol, &doc));
  return kOk;
}

inline int cmd_verify(Streams s, const std::string& instance_path,
                      const std::string& selection) {
  const io::InstanceDocument doc =
      io::parse_instance_document(load_json(instance_path));
  std::vector<ItemRef> picks;
  Findings unknown;
  Json ids = Json::array();
  for (const auto& id : split_list(selection)) {
    ids.push_back(id);
    if (auto ref = doc.find_item(id))
      picks.push_back(*ref);
    else
      unknown.push_back("unknown operation " + id);
  }
  Tenths profit;
  Tenths cost;
  for (const auto& r : picks) {
    profit += doc.instance.groups[r.group][r.item].profit;
    cost += doc.instance.groups[r.group][r.item].cost;
  }
  Findings findings = unknown;
  for (auto& f : verify_assignment(doc.instance, picks))
    findings.push_back(std::move(f));
  Json out;
  out["feasible"] = findings.empty();
  out["selection"] = std::move(ids);
  out["profit"] = format_tenths(profit);
  out["cost"] = format_tenths(cost);
  out["budget"] = format_tenths(doc.instance.budget);
  out["comparator"] = to_string(doc.instance.comparator);
  out["findings"] = findings;
  s.out << io::to_text(out);
  if (!unknown.empty()) {
    s.err << "morphplan: " << join_findings(unknown) << "\n";
    return kFindings;
  }
  if (!findings.empty()) {
    s.err << "morphplan: " << join_findings(findings) << "\n";
    return kInfeasible;
  }
  return kOk;
}

struct ChainInputs {
  ComponentTree tree;
  Configuration initial;
  std::vector<StagePlan> stages;
  std::vector<datasets::ReferenceClaim> claims;
};

inline ChainInputs builtin_example() {
  const auto plans = datasets::builtin_stage_plans();
  return {datasets::builtin_model(), *datasets::find_configuration("S5G"),
          {plans.stage1, plans.stage2}, datasets::reference_claims()};
}

inline int emit_strategy(Streams s, const ChainInputs& in,
                         const std::string& format, const Environment& env) {
  const Strategy strategy = plan_chain(in.tree, in.initial, in.stages);
  const Json report = render_strategy(in.tree, strategy, in.claims);
  if (format == "text")
    s.out << render_strategy_text(report,
                                  env.stdout_is_terminal && !env.no_color);
  else
    s.out << io::to_text(report);
  if (!strategy.ok()) {
    s.err << "morphplan: stage " << strategy.failure->stage_id
          << " failed: " << strategy.failure->message << "\n";
    return strategy.failure->kind == "solver" ? kInfeasible : kFindings;
  }
  return kOk;
}

inline void override_solver(ChainInputs& in, const std::string& solver_name) {
  if (solver_name.empty()) return;
  const auto solver = parse_solver(solver_name);
  if (!solver) throw IoError("unknown solver " + solver_name);
  for (auto& st : in.stages) st.solver = *solver;
}

inline int cmd_plan(Streams s, const Environment& env,
                    const std::string& model_path, const std::string& initial,
                    const std::string& stages, bool example,
                    const std::string& solver, const std::string& format) {
  if (example) {
    ChainInputs in = builtin_example();
    override_solver(in, solver);
    return emit_strategy(s, in, format, env);
  }
  if (model_path.empty() || initial.empty() || stages.empty())
    throw CLI::RequiredError(
        "plan needs --model, --initial and --stages (or --paper-example)");
  ChainInputs in{io::parse_model(read_file(model_path)), {}, {}, {}};
  in.initial = resolve_configuration(initial, in.tree);
  for (const auto& path : split_list(stages))
    in.stages.push_back(io::parse_stage_plan(load_json(path)));
  override_solver(in, solver);
  return emit_strategy(s, in, format, env);
}

inline int cmd_report(Streams s, const Environment& env,
                      const std::string& chain_path, bool example,
                      const std::string& format) {
  if (example) return emit_strategy(s, builtin_example(), format, env);
  if (chain_path.empty())
    throw CLI::RequiredError("report needs --strategy (or --paper-example)");
  const fs::path base = fs::path(chain_path).parent_path();
  const io::ChainDocument chain = io::parse_chain(load_json(chain_path));
  ChainInputs in{io::parse_model(read_file(base / chain.model)), {}, {}, {}};
  in.initial = resolve_configuration(chain.initial, in.tree, base);
  for (const auto& path : chain.stages)
    in.stages.push_back(io::parse_stage_plan(load_json(base / path)));
  return emit_strategy(s, in, format, env);
}

/// Writes every built-in dataset as an interchange file under `dir`.
/// Returns the written paths relative to `dir`, in write order.
inline std::vector<std::string> export_datasets(const fs::path& dir) {
  std::vector<std::pair<std::string, Json>> files;
  const ComponentTree wireless = datasets::builtin_model();
  const ComponentTree enterprise = datasets::enterprise_model();
  files.emplace_back("wireless.json", io::serialize_model(wireless));
  files.emplace_back("enterprise.json", io::serialize_model(enterprise));
  for (const auto& c : datasets::builtin_generations())
    files.emplace_back("configs/" + c.id + ".json",
                       io::serialize_configuration(c, &wireless));
  for (const auto& c : datasets::reference_improvements())
    files.emplace_back("configs/" + c.id + ".json",
                       io::serialize_configuration(c, &wireless));
  const auto plans = datasets::builtin_stage_plans();
  files.emplace_back("table8.json", io::serialize_stage_plan(plans.stage1));
  files.emplace_back("table9.json", io::serialize_stage_plan(plans.stage2));
  files.emplace_back("table8_instance.json",
                     io::serialize_instance(build_mckp_instance(
                         plans.stage1.groups, plans.stage1.budget,
                         plans.stage1.comparator)));
  files.emplace_back("table9_instance.json",
                     io::serialize_instance(build_mckp_instance(
                         plans.stage2.groups, plans.stage2.budget,
                         plans.stage2.comparator)));
  files.emplace_back("activities.json",
                     io::serialize_activities(datasets::activity_catalog()));
  files.emplace_back("chain.json",
                     io::serialize_chain({"wireless.json", "configs/S5G.json",
                                          {"table8.json", "table9.json"}}));
  std::vector<std::string> written;
  for (const auto& [rel, doc] : files) {
    write_file(dir / rel, io::to_text(doc));
    written.push_back(rel);
  }
  return written;
}

inline int cmd_export(Streams s, const std::string& dir) {
  const auto written = export_datasets(dir);
  Json doc;
  doc["directory"] = dir;
  doc["written"] = written;
  s.out << io::to_text(doc);
  return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, const Environment& env = {}) {
  detail::Streams streams{out, err};

  CLI::App app{"Morphological system modeling and multi-stage improvement "
               "planning",
               "morphplan"};
  app.require_subcommand(1);

  std::string model, config_from, config_to, instance, solver = "dp",
                                                        selection, initial,
                                                        stages, strategy,
                                                        format = "json",
                                                        export_dir;
  std::string plan_solver;
  std::vector<std::string> validate_paths;
  bool example = false;

  auto* validate = app.add_subcommand("validate", "Validate a model and configurations");
  validate->add_option("files", validate_paths, "<model> [<config>...]")
      ->required();

  auto* diff = app.add_subcommand("diff", "Deltas between two configurations");
  diff->add_option("--model", model, "Model file")->required();
  diff->add_option("--from", config_from,
                   "Configuration file (*.json) or built-in id")
      ->required();
  diff->add_option("--to", config_to,
                   "Configuration file (*.json) or built-in id")
      ->required();

  auto* solve_cmd = app.add_subcommand("solve", "Solve a knapsack instance");
  solve_cmd->add_option("--instance", instance,
                        "Instance or operation-set file")
      ->required();
  solve_cmd->add_option("--solver", solver, "greedy|dp|exhaustive")
      ->check(CLI::IsMember({"greedy", "dp", "exhaustive"}));

  auto* verify = app.add_subcommand("verify", "Check a selection for feasibility");
  verify->add_option("--instance", instance, "Instance or operation-set file")
      ->required();
  verify->add_option("--selection", selection, "Comma-separated operation ids")
      ->required();

  auto* plan = app.add_subcommand("plan", "Run a multi-stage improvement chain");
  plan->add_option("--model", model, "Model file");
  plan->add_option("--initial", initial,
                   "Initial configuration file (*.json) or built-in id");
  plan->add_option("--stages", stages, "Comma-separated operation-set files");
  plan->add_option("--solver", plan_solver, "Override every stage's solver")
      ->check(CLI::IsMember({"greedy", "dp", "exhaustive"}));
  plan->add_flag("--paper-example", example,
                 "Run the built-in two-stage 5G example");
  plan->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* datasets_cmd = app.add_subcommand("datasets", "Built-in datasets");
  datasets_cmd->require_subcommand(1);
  auto* export_cmd = datasets_cmd->add_subcommand(
      "export", "Write the built-in datasets as interchange files");
  export_cmd->add_option("dir", export_dir, "Output directory")->required();

  auto* report = app.add_subcommand("report", "Render a strategy report");
  report->add_option("--strategy", strategy, "Chain document");
  report->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  report->add_flag("--paper-example", example,
                   "Report the built-in two-stage 5G example");

  std::vector<std::string> argv_storage{"morphplan"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "morphplan: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*validate)
      return detail::cmd_validate(streams, validate_paths.front(),
                                  {validate_paths.begin() + 1,
                                   validate_paths.end()});
    if (*diff) return detail::cmd_diff(streams, model, config_from, config_to);
    if (*solve_cmd) return detail::cmd_solve(streams, instance, solver);
    if (*verify) return detail::cmd_verify(streams, instance, selection);
    if (*plan)
      return detail::cmd_plan(streams, env, model, initial, stages, example,
                              plan_solver, format);
    if (*export_cmd) return detail::cmd_export(streams, export_dir);
    if (*report)
      return detail::cmd_report(streams, env, strategy, example, format);
  } catch (const CLI::ParseError& e) {
    err << "morphplan: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const IoError& e) {
    return detail::fail(streams, kUsage, "io", e.what());
  } catch (const SolverError& e) {
    return detail::fail(streams, kInfeasible, "solver", e.what());
  } catch (const ValidationError& e) {
    return detail::fail(streams, kFindings, "validation", e.what(),
                        e.findings());
  } catch (const PreconditionError& e) {
    return detail::fail(streams, kFindings, "precondition", e.what());
  } catch (const SchemaError& e) {
    return detail::fail(streams, kFindings, "schema", e.what());
  }
  return kUsage;
}

}  // namespace morphplan::cli

#endif  // MORPHPLAN_CLI_HPP
