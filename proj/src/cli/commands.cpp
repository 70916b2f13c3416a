#include "fairmix/cli/commands.hpp"

#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "fairmix/error.hpp"
#include "fairmix/kernels/enumeration.hpp"
#include "fairmix/pipeline.hpp"

namespace fairmix::cli {

using nlohmann::json;

InstanceDocument generate_instance(const GenOptions& options) {
  if (options.agents == 0) throw InputError("gen: need at least one agent");
  if (options.min_utility > options.max_utility) throw InputError("gen: empty utility range");
  std::mt19937_64 rng(options.seed);
  // Plain modulo keeps the stream identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(options.max_utility - options.min_utility) + 1;
  auto draw = [&](long long lo, std::uint64_t width) { return lo + static_cast<long long>(rng() % width); };

  InstanceDocument doc;
  for (std::size_t i = 0; i < options.agents; ++i) {
    doc.agent_ids.push_back(std::to_string(i + 1));
    doc.weights.emplace_back(static_cast<long>(options.weights == WeightMode::equal ? 1 : draw(1, 10)));
  }
  for (std::size_t o = 0; o < options.items; ++o) doc.item_ids.push_back("o" + std::to_string(o + 1));
  doc.utilities = Matrix<Rational>(options.agents, options.items);
  for (std::size_t i = 0; i < options.agents; ++i) {
    for (std::size_t o = 0; o < options.items; ++o) {
      doc.utilities(i, o) = Rational(static_cast<long>(draw(options.min_utility, span)));
    }
  }
  return doc;
}

namespace {

struct Loaded {
  InstanceDocument document;
  Instance instance;
};

Loaded load_instance(const std::string& path) {
  auto document = parse_instance_document(read_json_file(path));
  Instance instance = to_instance(document);
  return {std::move(document), std::move(instance)};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

std::size_t agent_index(const InstanceDocument& doc, const std::string& id) {
  for (std::size_t i = 0; i < doc.agent_ids.size(); ++i) {
    if (doc.agent_ids[i] == id) return i;
  }
  throw InputError("unknown agent '" + id + "'");
}

int solve(const std::string& path, const std::string& order, const std::string& root_rule,
          const std::string& roots, std::ostream& out) {
  const auto [doc, instance] = load_instance(path);
  ExplorationStrategy strategy;
  strategy.order = order == "dfs" ? ExplorationOrder::depth_first : ExplorationOrder::breadth_first;
  strategy.root_rule = root_rule == "lowest-index" ? RootRule::lowest_index : RootRule::shares_one_item;
  for (const auto& id : split_list(roots)) strategy.preferred_roots.push_back(agent_index(doc, id));

  const PipelineResult result = rounding_pipeline(instance, strategy);
  if (!result.prop1.holds || !result.fpo_certified) {
    throw InternalError("pipeline output failed its own certificates");
  }
  json witnesses = json::array();
  for (const auto& w : result.prop1.agents) witnesses.push_back(witness_to_json(w, doc));
  json certificates{{"prop1", std::move(witnesses)},
                    {"prop1Holds", result.prop1.holds},
                    {"fpoCertified", result.fpo_certified},
                    {"welfareWeights", result.welfare_weights ? weights_to_json(*result.welfare_weights, doc)
                                                              : json(nullptr)}};
  json output{{"allocation", allocation_to_json(result.allocation, doc)},
              {"fractionalIntermediate", fractional_to_json(result.fractional, doc)},
              {"certificates", std::move(certificates)}};
  out << output.dump(2) << '\n';
  return exit_ok;
}

int verify(const std::string& instance_path, const std::string& allocation_path, const std::string& properties,
           const std::string& baseline_path, std::uint64_t cap, std::ostream& out) {
  const auto [doc, instance] = load_instance(instance_path);
  const IntegralAllocation pi = parse_allocation(read_json_file(allocation_path), doc);
  const auto requested = split_list(properties);
  if (requested.empty()) throw InputError("verify: no properties requested");

  json reports = json::array();
  bool all = true;
  for (const auto& property : requested) {
    json report;
    if (property == "prop") {
      report = report_to_json(weighted_prop(instance, FractionalAllocation(pi)), doc);
    } else if (property == "prop1") {
      report = report_to_json(weighted_prop1(instance, pi), doc);
    } else if (property == "propx") {
      report = report_to_json(propx(instance, pi), doc);
    } else if (property == "po") {
      report = report_to_json(pareto_optimality_report(instance, pi, {cap, true}), doc);
    } else if (property == "fpo") {
      const FractionalAllocation x(pi);
      report = {{"property", "fpo"}, {"holds", !pareto_improvement_exists(instance, x)}};
      if (auto weights = find_welfare_weights(instance, x)) report["welfareWeights"] = weights_to_json(*weights, doc);
    } else if (property == "dominates") {
      if (baseline_path.empty()) throw InputError("verify: property 'dominates' needs --baseline");
      const IntegralAllocation baseline = parse_allocation(read_json_file(baseline_path), doc);
      report = {{"property", "dominates"}, {"holds", pareto_dominates(instance, pi, baseline)}};
    } else {
      throw InputError("verify: unknown property '" + property + "'");
    }
    all = all && report["holds"].get<bool>();
    reports.push_back(std::move(report));
  }
  out << json{{"holds", all}, {"reports", std::move(reports)}}.dump(2) << '\n';
  return all ? exit_ok : exit_violated;
}

template <typename Value>
kernels::SearchResult search_table(const kernels::ValueTable<Value>& table, kernels::Property property,
                                   std::uint64_t total) {
  return kernels::count_satisfying_parallel(table, property, total);
}

int search(const std::string& path, const std::string& property_name, std::uint64_t cap, std::ostream& out) {
  const auto [doc, instance] = load_instance(path);
  kernels::Property property;
  std::vector<Rational> thresholds;
  if (property_name == "prop" || property_name == "prop1") {
    property = property_name == "prop" ? kernels::Property::prop : kernels::Property::prop1;
    for (std::size_t i = 0; i < instance.agents(); ++i) thresholds.push_back(proportional_share(instance, i));
  } else if (property_name == "propx") {
    property = kernels::Property::propx;
    const Rational n(static_cast<unsigned long>(instance.agents()));
    for (std::size_t i = 0; i < instance.agents(); ++i) thresholds.push_back(instance.total_utility(i) / n);
  } else {
    throw InputError("search: unsupported property '" + property_name + "' (use prop, prop1 or propx)");
  }
  const auto total = kernels::allocation_count(instance.agents(), instance.items(), cap);
  if (!total) throw InputError("search: enumeration exceeds the cap of " + std::to_string(cap) + " allocations");

  kernels::SearchResult result;
  if (auto table = kernels::integer_table(instance, thresholds)) {
    result = search_table(*table, property, *total);
  } else {
    result = search_table(kernels::exact_table(instance, thresholds), property, *total);
  }
  json witness = nullptr;
  if (result.first) {
    const IntegralAllocation pi(instance.agents(), kernels::decode(*result.first, instance.agents(), instance.items()));
    witness = allocation_to_json(pi, doc);
  }
  out << json{{"property", property_name},
              {"total", result.total},
              {"satisfying", result.satisfying},
              {"witness", std::move(witness)}}
             .dump(2)
      << '\n';
  return result.satisfying > 0 ? exit_ok : exit_violated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted PROP1 + fPO allocations for goods and chores"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string allocation_path;
  std::string baseline_path;
  std::string order = "bfs";
  std::string root_rule = "one-item";
  std::string roots;
  std::string properties;
  std::string property;
  std::uint64_t cap = EnumerationOptions{}.cap;
  GenOptions gen;
  std::string weight_mode = "equal";

  auto* solve_cmd = app.add_subcommand("solve", "compute a weighted PROP1 + fPO allocation");
  solve_cmd->add_option("instance", instance_path, "instance JSON")->required();
  solve_cmd->add_option("--strategy-order", order, "tree exploration order")->check(CLI::IsMember({"bfs", "dfs"}));
  solve_cmd->add_option("--root-rule", root_rule, "root choice per component")
      ->check(CLI::IsMember({"one-item", "lowest-index"}));
  solve_cmd->add_option("--roots", roots, "comma-separated agent ids tried first as roots");

  auto* verify_cmd = app.add_subcommand("verify", "check properties of an allocation");
  verify_cmd->add_option("instance", instance_path, "instance JSON")->required();
  verify_cmd->add_option("allocation", allocation_path, "allocation JSON")->required();
  verify_cmd->add_option("--property", properties, "prop,prop1,propx,po,fpo,dominates")->required();
  verify_cmd->add_option("--baseline", baseline_path, "allocation compared against for 'dominates'");
  verify_cmd->add_option("--cap", cap, "brute-force enumeration cap");

  auto* gen_cmd = app.add_subcommand("gen", "print a random instance");
  gen_cmd->add_option("--agents,-n", gen.agents, "number of agents")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--items,-m", gen.items, "number of items");
  gen_cmd->add_option("--min", gen.min_utility, "smallest utility");
  gen_cmd->add_option("--max", gen.max_utility, "largest utility");
  gen_cmd->add_option("--weights", weight_mode, "equal or random")->check(CLI::IsMember({"equal", "random"}));
  gen_cmd->add_option("--seed", gen.seed, "random seed");

  auto* search_cmd = app.add_subcommand("search", "count integral allocations with a property");
  search_cmd->add_option("instance", instance_path, "instance JSON")->required();
  search_cmd->add_option("--property", property, "prop, prop1 or propx")->required();
  search_cmd->add_option("--cap", cap, "enumeration cap");

  std::vector<std::string> argv_storage{"fairmix"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return exit_input_error;
  }

  try {
    if (*solve_cmd) return solve(instance_path, order, root_rule, roots, out);
    if (*verify_cmd) return verify(instance_path, allocation_path, properties, baseline_path, cap, out);
    if (*search_cmd) return search(instance_path, property, cap, out);
    if (*gen_cmd) {
      gen.weights = weight_mode == "random" ? WeightMode::random : WeightMode::equal;
      out << to_json(generate_instance(gen)).dump(2) << '\n';
      return exit_ok;
    }
  } catch (const InputError& e) {
    err << json{{"error", "input"}, {"message", e.what()}}.dump() << '\n';
    return exit_input_error;
  } catch (const InternalError& e) {
    err << json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return exit_internal_error;
  }
  return exit_input_error;
}

}  // namespace fairmix::cli
