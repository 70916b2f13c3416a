#pragma once

#include <cstddef>
#include <vector>

#include "fairmix/instance.hpp"

namespace fairmix {

enum class ExplorationOrder { breadth_first, depth_first };

enum class RootRule {
  /// Lowest-index agent sharing exactly one item. Such an agent exists in
  /// every acyclic graph that still has a shared item.
  shares_one_item,
  /// Lowest-index agent sharing any item.
  lowest_index,
};

/// How the rounding walks each tree of the consumption graph. Every choice
/// keeps the explored agents of a component connected, which is all the
/// PROP1 and fPO guarantees need.
struct ExplorationStrategy {
  ExplorationOrder order = ExplorationOrder::breadth_first;
  RootRule root_rule = RootRule::shares_one_item;
  /// Agents tried as roots before the rule applies: the first listed agent
  /// that still shares an item becomes the next root.
  std::vector<std::size_t> preferred_roots;
};

/// Instrumentation collected while rounding.
struct RoundingTrace {
  std::vector<std::size_t> roots;
  std::vector<std::size_t> activation_order;
  /// Per agent: shared items decided against it before it became active.
  std::vector<std::size_t> predecessor_losses;
};

/// Gives every shared item that some sharer values at 0 to its lowest-index
/// sharer. Throws InputError if another sharer values such an item nonzero,
/// since then the move would change a utility (and the input is not fPO).
FractionalAllocation resolve_zero_items(const Instance& instance, const FractionalAllocation& x);

/// Rounds an acyclic allocation whose shared items have one strict sign per
/// item. The active agent takes every shared good and passes every shared
/// chore to its lowest-index co-sharer. Throws InputError on a cyclic graph,
/// a zero-valued shared item, or a mixed-sign shared item.
IntegralAllocation round_acyclic(const Instance& instance, const FractionalAllocation& x,
                                 const ExplorationStrategy& strategy = {},
                                 RoundingTrace* trace = nullptr);

}  // namespace fairmix
