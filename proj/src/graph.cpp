#include "fairmix/graph.hpp"

#include <algorithm>
#include <numeric>

namespace fairmix {

ConsumptionGraph::ConsumptionGraph(const FractionalAllocation& x)
    : agent_items_(x.agents()), item_agents_(x.items()) {
  for (std::size_t i = 0; i < x.agents(); ++i) {
    for (std::size_t o = 0; o < x.items(); ++o) {
      if (sgn(x(i, o)) > 0) {
        agent_items_[i].push_back(o);
        item_agents_[o].push_back(i);
        ++edges_;
      }
    }
  }
}

ConsumptionGraph::ConsumptionGraph(const IntegralAllocation& pi)
    : agent_items_(pi.agents()), item_agents_(pi.items()) {
  for (std::size_t o = 0; o < pi.items(); ++o) {
    agent_items_[pi.owner(o)].push_back(o);
    item_agents_[o].push_back(pi.owner(o));
    ++edges_;
  }
}

bool ConsumptionGraph::has_edge(std::size_t agent, std::size_t item) const {
  const auto& items = agent_items_[agent];
  return std::binary_search(items.begin(), items.end(), item);
}

std::vector<std::size_t> ConsumptionGraph::neighbors(std::size_t agent) const {
  std::vector<std::size_t> out;
  for (std::size_t o : agent_items_[agent]) {
    for (std::size_t k : item_agents_[o]) {
      if (k != agent) out.push_back(k);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t ConsumptionGraph::component_count() const {
  // Union-find over agents [0,n) and items [n, n+m).
  const std::size_t n = agents();
  std::vector<std::size_t> parent(n + items());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = parent.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t o : agent_items_[i]) {
      const auto a = find(i);
      const auto b = find(n + o);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

namespace {

struct Frame {
  Vertex vertex;
  std::size_t next = 0;  // next adjacency position to try
};

}  // namespace

std::optional<std::vector<Vertex>> find_cycle(const ConsumptionGraph& graph) {
  const std::size_t n = graph.agents();
  const std::size_t m = graph.items();
  // Vertex ids: agents [0,n), items [n,n+m).
  auto id = [n](const Vertex& v) { return v.kind == Vertex::Kind::agent ? v.index : n + v.index; };
  auto adjacency = [&](const Vertex& v) -> const std::vector<std::size_t>& {
    return v.kind == Vertex::Kind::agent ? graph.items_of(v.index) : graph.consumers_of(v.index);
  };
  auto other = [](const Vertex& v, std::size_t k) {
    return v.kind == Vertex::Kind::agent ? Vertex::item(k) : Vertex::agent(k);
  };

  std::vector<bool> visited(n + m, false);
  std::vector<std::size_t> depth(n + m, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    std::vector<Frame> stack{{Vertex::agent(root)}};
    visited[root] = true;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto& adj = adjacency(top.vertex);
      if (top.next == adj.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex next = other(top.vertex, adj[top.next++]);
      if (stack.size() >= 2 && stack[stack.size() - 2].vertex == next) continue;  // tree edge back to parent
      if (visited[id(next)]) {
        // Back edge to an ancestor on the stack: the path from it to top is a cycle.
        std::vector<Vertex> cycle;
        for (std::size_t d = depth[id(next)]; d < stack.size(); ++d) cycle.push_back(stack[d].vertex);
        if (cycle.front().kind != Vertex::Kind::agent) {
          std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
        }
        return cycle;
      }
      visited[id(next)] = true;
      depth[id(next)] = stack.size();
      stack.push_back({next});
    }
  }
  return std::nullopt;
}

std::vector<Vertex> rotate_to_lowest_agent(std::vector<Vertex> cycle) {
  auto best = cycle.end();
  for (auto it = cycle.begin(); it != cycle.end(); ++it) {
    if (it->kind == Vertex::Kind::agent && (best == cycle.end() || it->index < best->index)) best = it;
  }
  if (best != cycle.end()) std::rotate(cycle.begin(), best, cycle.end());
  return cycle;
}

}  // namespace fairmix

namespace fairmix {

std::optional<std::size_t> find_mixed_sign_shared_item(const Instance& instance,
                                                       const ConsumptionGraph& graph) {
  for (std::size_t o = 0; o < graph.items(); ++o) {
    const auto& consumers = graph.consumers_of(o);
    if (consumers.size() < 2) continue;
    const int first = sgn(instance.utility(consumers.front(), o));
    for (std::size_t k : consumers) {
      if (sgn(instance.utility(k, o)) != first) return o;
    }
  }
  return std::nullopt;
}

}  // namespace fairmix
