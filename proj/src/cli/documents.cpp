#include "fairmix/cli/documents.hpp"

#include <fstream>
#include <map>
#include <set>

#include "fairmix/error.hpp"

namespace fairmix::cli {

using nlohmann::json;

namespace {

Rational rational_field(const json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(std::to_string(value.get<long long>()));
  throw InputError(where + ": expected a rational string such as \"3/10\"");
}

const json& member(const json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) {
    throw InputError(where + ": missing \"" + key + "\"");
  }
  return object.at(key);
}

std::string string_field(const json& value, const std::string& where) {
  if (!value.is_string()) throw InputError(where + ": expected a string id");
  return value.get<std::string>();
}

template <typename Ids>
std::map<std::string, std::size_t> index_ids(const Ids& ids, const char* kind) {
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (!index.emplace(ids[k], k).second) throw InputError(std::string("duplicate ") + kind + " id '" + ids[k] + "'");
  }
  return index;
}

}  // namespace

InstanceDocument parse_instance_document(const json& root) {
  InstanceDocument doc;
  const json& agents = member(root, "agents", "instance");
  const json& items = member(root, "items", "instance");
  const json& utilities = member(root, "utilities", "instance");
  if (!agents.is_array() || agents.empty()) throw InputError("instance: \"agents\" must be a non-empty array");
  if (!items.is_array()) throw InputError("instance: \"items\" must be an array");

  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string where = "agents[" + std::to_string(i) + "]";
    doc.agent_ids.push_back(string_field(member(agents[i], "id", where), where + ".id"));
    Rational weight = rational_field(member(agents[i], "weight", where), where + ".weight");
    if (sgn(weight) <= 0) throw InputError(where + ".weight must be positive, got " + to_string(weight));
    doc.weights.push_back(std::move(weight));
  }
  for (std::size_t o = 0; o < items.size(); ++o) {
    doc.item_ids.push_back(string_field(items[o], "items[" + std::to_string(o) + "]"));
  }
  index_ids(doc.agent_ids, "agent");
  index_ids(doc.item_ids, "item");

  if (!utilities.is_array() || utilities.size() != doc.agent_ids.size()) {
    throw InputError("instance: \"utilities\" needs one row per agent");
  }
  doc.utilities = Matrix<Rational>(doc.agent_ids.size(), doc.item_ids.size());
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    const json& row = utilities[i];
    if (!row.is_array() || row.size() != doc.item_ids.size()) {
      throw InputError("utilities[" + std::to_string(i) + "] needs one entry per item");
    }
    for (std::size_t o = 0; o < row.size(); ++o) {
      doc.utilities(i, o) = rational_field(row[o], "utilities[" + std::to_string(i) + "][" + std::to_string(o) + "]");
    }
  }
  return doc;
}

json to_json(const InstanceDocument& doc) {
  json agents = json::array();
  for (std::size_t i = 0; i < doc.agent_ids.size(); ++i) {
    agents.push_back({{"id", doc.agent_ids[i]}, {"weight", to_string(doc.weights[i])}});
  }
  json utilities = json::array();
  for (std::size_t i = 0; i < doc.utilities.rows(); ++i) {
    json row = json::array();
    for (const auto& u : doc.utilities.row(i)) row.push_back(to_string(u));
    utilities.push_back(std::move(row));
  }
  json out;
  out["agents"] = std::move(agents);
  out["items"] = doc.item_ids;
  out["utilities"] = std::move(utilities);
  return out;
}

Instance to_instance(const InstanceDocument& doc) { return Instance(doc.weights, doc.utilities); }

IntegralAllocation parse_allocation(const json& root, const InstanceDocument& doc) {
  const json* owner = nullptr;
  if (root.is_object() && root.contains("owner")) {
    owner = &root.at("owner");
  } else if (root.is_object() && root.contains("allocation")) {
    owner = &member(root.at("allocation"), "owner", "allocation");
  } else {
    throw InputError("allocation: missing \"owner\"");
  }
  if (!owner->is_object()) throw InputError("allocation: \"owner\" must map item ids to agent ids");
  const auto agents = index_ids(doc.agent_ids, "agent");
  const auto items = index_ids(doc.item_ids, "item");
  std::vector<std::size_t> owners(doc.item_ids.size(), 0);
  std::set<std::size_t> seen;
  for (const auto& [item_id, agent_value] : owner->items()) {
    const auto item = items.find(item_id);
    if (item == items.end()) throw InputError("allocation: unknown item '" + item_id + "'");
    const std::string agent_id = string_field(agent_value, "allocation.owner." + item_id);
    const auto agent = agents.find(agent_id);
    if (agent == agents.end()) throw InputError("allocation: unknown agent '" + agent_id + "'");
    owners[item->second] = agent->second;
    seen.insert(item->second);
  }
  if (seen.size() != doc.item_ids.size()) {
    for (std::size_t o = 0; o < doc.item_ids.size(); ++o) {
      if (!seen.count(o)) throw InputError("allocation: item '" + doc.item_ids[o] + "' has no owner");
    }
  }
  return IntegralAllocation(doc.agent_ids.size(), std::move(owners));
}

json allocation_to_json(const IntegralAllocation& pi, const InstanceDocument& doc) {
  json owner = json::object();
  for (std::size_t o = 0; o < pi.items(); ++o) owner[doc.item_ids[o]] = doc.agent_ids[pi.owner(o)];
  return {{"owner", std::move(owner)}};
}

json fractional_to_json(const FractionalAllocation& x, const InstanceDocument& doc) {
  json out = json::object();
  for (std::size_t i = 0; i < x.agents(); ++i) {
    json row = json::object();
    for (std::size_t o = 0; o < x.items(); ++o) {
      if (sgn(x(i, o)) > 0) row[doc.item_ids[o]] = to_string(x(i, o));
    }
    out[doc.agent_ids[i]] = std::move(row);
  }
  return out;
}

json witness_to_json(const AgentWitness& w, const InstanceDocument& doc) {
  return {{"agent", doc.agent_ids[w.agent]},
          {"holds", w.holds},
          {"clause", to_string(w.clause)},
          {"item", w.item ? json(doc.item_ids[*w.item]) : json(nullptr)},
          {"value", to_string(w.value)},
          {"threshold", to_string(w.threshold)}};
}

json report_to_json(const PropertyReport& report, const InstanceDocument& doc) {
  json out{{"property", report.property}, {"holds", report.holds}};
  if (!report.agents.empty()) {
    json agents = json::array();
    for (const auto& w : report.agents) agents.push_back(witness_to_json(w, doc));
    out["agents"] = std::move(agents);
  }
  if (report.dominating) out["dominating"] = allocation_to_json(*report.dominating, doc);
  return out;
}

json weights_to_json(const WelfareWeights& weights, const InstanceDocument& doc) {
  json out = json::object();
  for (std::size_t i = 0; i < weights.lambda.size(); ++i) out[doc.agent_ids[i]] = to_string(weights.lambda[i]);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace fairmix::cli
