#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fairmix/instance.hpp"

namespace fairmix {

/// Vertex of the bipartite agent/item graph.
struct Vertex {
  enum class Kind { agent, item };
  Kind kind;
  std::size_t index;

  static Vertex agent(std::size_t i) { return {Kind::agent, i}; }
  static Vertex item(std::size_t o) { return {Kind::item, o}; }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Consumption graph G_x: edge {i,o} iff x_{i,o} > 0. Adjacency lists are
/// sorted ascending.
class ConsumptionGraph {
 public:
  explicit ConsumptionGraph(const FractionalAllocation& x);
  explicit ConsumptionGraph(const IntegralAllocation& pi);

  std::size_t agents() const { return agent_items_.size(); }
  std::size_t items() const { return item_agents_.size(); }
  std::size_t edge_count() const { return edges_; }

  const std::vector<std::size_t>& items_of(std::size_t agent) const { return agent_items_[agent]; }
  const std::vector<std::size_t>& consumers_of(std::size_t item) const { return item_agents_[item]; }
  bool has_edge(std::size_t agent, std::size_t item) const;

  /// Agents sharing at least one item with `agent`, ascending.
  std::vector<std::size_t> neighbors(std::size_t agent) const;

  /// Number of connected components over all n + m vertices.
  std::size_t component_count() const;

 private:
  std::vector<std::vector<std::size_t>> agent_items_;
  std::vector<std::vector<std::size_t>> item_agents_;
  std::size_t edges_ = 0;
};

/// One simple cycle as an alternating agent/item sequence starting at an
/// agent; the closing edge runs from the last vertex back to the first.
/// Depth-first from the lowest-index agent, lowest-index neighbor first.
std::optional<std::vector<Vertex>> find_cycle(const ConsumptionGraph& graph);

/// Rotates a cycle so that it starts at its lowest-index agent, keeping the
/// traversal direction.
std::vector<Vertex> rotate_to_lowest_agent(std::vector<Vertex> cycle);

}  // namespace fairmix

namespace fairmix {

/// Lowest-index item consumed by two or more agents whose utilities for it do
/// not share one sign (all > 0, all < 0, or all = 0). At an fPO allocation no
/// such item exists.
std::optional<std::size_t> find_mixed_sign_shared_item(const Instance& instance,
                                                       const ConsumptionGraph& graph);

}  // namespace fairmix
