#include "fairmix/improve.hpp"

#include <string>

#include "fairmix/error.hpp"
#include "fairmix/graph.hpp"

namespace fairmix {

FractionalAllocation proportional_seed(const Instance& instance) {
  Matrix<Rational> fractions(instance.agents(), instance.items());
  for (std::size_t i = 0; i < instance.agents(); ++i) {
    for (auto& f : fractions.row(i)) f = instance.weight(i);
  }
  return FractionalAllocation(std::move(fractions));
}

lp::Problem build_lp_t(const Instance& instance, const FractionalAllocation& seed,
                       const std::set<AgentItem>& forbidden) {
  require_shape(instance, seed);
  const std::size_t n = instance.agents();
  const std::size_t m = instance.items();
  lp::Problem problem;
  problem.variables = n * m;
  problem.objective.assign(n * m, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t o = 0; o < m; ++o) problem.objective[lp_variable(instance, i, o)] = instance.utility(i, o);
  }

  for (std::size_t i = 0; i < n; ++i) {
    lp::Constraint dominance{std::vector<Rational>(n * m, Rational(0)), lp::Relation::greater_equal,
                             utility(instance, seed, i)};
    for (std::size_t o = 0; o < m; ++o) dominance.coefficients[lp_variable(instance, i, o)] = instance.utility(i, o);
    problem.constraints.push_back(std::move(dominance));
  }
  for (std::size_t o = 0; o < m; ++o) {
    lp::Constraint column{std::vector<Rational>(n * m, Rational(0)), lp::Relation::equal, Rational(1)};
    for (std::size_t i = 0; i < n; ++i) column.coefficients[lp_variable(instance, i, o)] = 1;
    problem.constraints.push_back(std::move(column));
  }
  for (const auto& pair : forbidden) {
    lp::Constraint zero{std::vector<Rational>(n * m, Rational(0)), lp::Relation::equal, Rational(0)};
    zero.coefficients[lp_variable(instance, pair.agent, pair.item)] = 1;
    problem.constraints.push_back(std::move(zero));
  }
  return problem;
}

FractionalAllocation allocation_from_lp(const Instance& instance,
                                        const std::vector<Rational>& assignment) {
  Matrix<Rational> fractions(instance.agents(), instance.items());
  for (std::size_t i = 0; i < instance.agents(); ++i) {
    for (std::size_t o = 0; o < instance.items(); ++o) fractions(i, o) = assignment[lp_variable(instance, i, o)];
  }
  return FractionalAllocation(std::move(fractions));
}

namespace {

AgentItem cycle_edge(const Vertex& a, const Vertex& b) {
  return a.kind == Vertex::Kind::agent ? AgentItem{a.index, b.index} : AgentItem{b.index, a.index};
}

void check_output(const Instance& instance, const FractionalAllocation& seed,
                  const FractionalAllocation& x) {
  for (std::size_t i = 0; i < instance.agents(); ++i) {
    if (utility(instance, x, i) < utility(instance, seed, i)) {
      throw InternalError("improved allocation is worse than the seed for agent " + std::to_string(i));
    }
  }
  if (auto item = find_mixed_sign_shared_item(instance, ConsumptionGraph(x))) {
    throw InternalError("item " + std::to_string(*item) +
                        " is shared by agents valuing it with different signs");
  }
}

}  // namespace

ImprovementState forbid_cycle_edges(const Instance& instance, const FractionalAllocation& seed,
                                    ImprovementState state) {
  require_shape(instance, seed);
  require_shape(instance, state.allocation);
  while (auto cycle = find_cycle(ConsumptionGraph(state.allocation))) {
    const auto ordered = rotate_to_lowest_agent(std::move(*cycle));
    bool removed = false;
    for (std::size_t k = 0; k < ordered.size() && !removed; ++k) {
      const AgentItem edge = cycle_edge(ordered[k], ordered[(k + 1) % ordered.size()]);
      auto forbidden = state.forbidden;
      forbidden.insert(edge);
      auto trial = lp::solve(build_lp_t(instance, seed, forbidden));
      ++state.lp_solves;
      if (trial.status == lp::Status::optimal && trial.value == state.optimum) {
        state.forbidden = std::move(forbidden);
        state.allocation = allocation_from_lp(instance, trial.assignment);
        removed = true;
      }
    }
    if (!removed) {
      throw InternalError("no edge of a consumption-graph cycle can be forbidden without losing welfare");
    }
  }
  check_output(instance, seed, state.allocation);
  return state;
}

ImprovementState improve_to_acyclic_fpo(const Instance& instance, const FractionalAllocation& seed) {
  require_shape(instance, seed);
  auto first = lp::solve(build_lp_t(instance, seed, {}));
  if (first.status != lp::Status::optimal) {
    throw InternalError(std::string("LP over allocations dominating the seed is ") + lp::to_string(first.status));
  }
  return forbid_cycle_edges(instance, seed,
                            ImprovementState{{}, first.value, allocation_from_lp(instance, first.assignment), 1});
}

}  // namespace fairmix
