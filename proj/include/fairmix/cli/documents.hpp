#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fairmix/instance.hpp"
#include "fairmix/verify.hpp"

namespace fairmix::cli {

/// Instance file contents. Rationals travel as strings ("p/q" or integers) so
/// nothing is lost to floating point.
///
///   {"agents":   [{"id": "1", "weight": "1/3"}, ...],
///    "items":    ["A", "b1", ...],
///    "utilities": [["3/10", "1/50", ...], ...]}   // [agent][item]
struct InstanceDocument {
  std::vector<std::string> agent_ids;
  std::vector<Rational> weights;
  std::vector<std::string> item_ids;
  Matrix<Rational> utilities;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

InstanceDocument parse_instance_document(const nlohmann::json& json);
nlohmann::json to_json(const InstanceDocument& document);
Instance to_instance(const InstanceDocument& document);

/// Reads {"owner": {itemId: agentId}}; a solve result (with the mapping under
/// "allocation") is accepted as well. Every item must be assigned.
IntegralAllocation parse_allocation(const nlohmann::json& json, const InstanceDocument& document);
nlohmann::json allocation_to_json(const IntegralAllocation& pi, const InstanceDocument& document);

/// Positive entries only: {agentId: {itemId: "p/q"}}.
nlohmann::json fractional_to_json(const FractionalAllocation& x, const InstanceDocument& document);

nlohmann::json witness_to_json(const AgentWitness& witness, const InstanceDocument& document);
nlohmann::json report_to_json(const PropertyReport& report, const InstanceDocument& document);
nlohmann::json weights_to_json(const WelfareWeights& weights, const InstanceDocument& document);

/// Reads and parses a JSON file; InputError on I/O or syntax errors.
nlohmann::json read_json_file(const std::string& path);

}  // namespace fairmix::cli
