#pragma once

#include <compare>
#include <cstddef>
#include <set>

#include "fairmix/instance.hpp"
#include "fairmix/lp.hpp"

namespace fairmix {

struct AgentItem {
  std::size_t agent;
  std::size_t item;
  friend auto operator<=>(const AgentItem&, const AgentItem&) = default;
};

/// Where the edge-forbidding loop ended: the forbidden set T, the optimum of
/// LP_T, and its basic optimal solution.
struct ImprovementState {
  std::set<AgentItem> forbidden;
  Rational optimum;
  FractionalAllocation allocation;
  std::size_t lp_solves = 0;
};

/// Equal division weighted by entitlement: x_{i,o} = b_i.
FractionalAllocation proportional_seed(const Instance& instance);

/// Column of x_{i,o} in the LP built by build_lp_t.
inline std::size_t lp_variable(const Instance& instance, std::size_t agent, std::size_t item) {
  return agent * instance.items() + item;
}

/// LP_T: maximize utilitarian welfare over allocations that give every agent
/// at least its utility under `seed` and never use a forbidden pair.
lp::Problem build_lp_t(const Instance& instance, const FractionalAllocation& seed,
                       const std::set<AgentItem>& forbidden);

/// Reads an LP_T assignment back into an allocation.
FractionalAllocation allocation_from_lp(const Instance& instance,
                                        const std::vector<Rational>& assignment);

/// Edge-forbidding loop. `state` must hold an optimal solution of LP_T for its
/// own T (it need not be a vertex). While the consumption graph has a cycle,
/// the cycle's edges are tried in order from its lowest-index agent, and the
/// first one whose prohibition keeps the optimum is added to T; the state
/// then moves to the basic optimum of the enlarged LP. Throws InternalError
/// if no edge of some cycle can be forbidden.
ImprovementState forbid_cycle_edges(const Instance& instance, const FractionalAllocation& seed,
                                    ImprovementState state);

/// Welfare-maximal allocation weakly dominating `seed` with an acyclic
/// consumption graph: the basic optimum of LP_{} when already acyclic,
/// otherwise whatever forbid_cycle_edges makes of it.
ImprovementState improve_to_acyclic_fpo(const Instance& instance, const FractionalAllocation& seed);

}  // namespace fairmix
