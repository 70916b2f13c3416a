#include "fairmix/rounding.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "fairmix/error.hpp"
#include "fairmix/graph.hpp"

namespace fairmix {

FractionalAllocation resolve_zero_items(const Instance& instance, const FractionalAllocation& x) {
  require_shape(instance, x);
  const ConsumptionGraph graph(x);
  Matrix<Rational> fractions = x.fractions();
  for (std::size_t o = 0; o < instance.items(); ++o) {
    const auto& sharers = graph.consumers_of(o);
    if (sharers.size() < 2) continue;
    const bool zero_item = std::any_of(sharers.begin(), sharers.end(),
                                       [&](std::size_t k) { return sgn(instance.utility(k, o)) == 0; });
    if (!zero_item) continue;
    for (std::size_t k : sharers) {
      if (sgn(instance.utility(k, o)) != 0) {
        throw InputError("item " + std::to_string(o) + " is shared by agents valuing it 0 and nonzero");
      }
    }
    for (std::size_t k : sharers) fractions(k, o) = 0;
    fractions(sharers.front(), o) = 1;
  }
  return FractionalAllocation(std::move(fractions));
}

namespace {

class Rounder {
 public:
  Rounder(const Instance& instance, const FractionalAllocation& x, const ExplorationStrategy& strategy)
      : instance_(instance),
        graph_(x),
        strategy_(strategy),
        owner_(instance.items(), 0),
        shared_(instance.items(), false),
        shared_count_(instance.agents(), 0),
        active_(instance.agents(), false),
        losses_(instance.agents(), 0) {
    const std::size_t vertices = instance.agents() + instance.items();
    if (graph_.edge_count() != vertices - graph_.component_count()) {
      throw InputError("consumption graph has a cycle");
    }
    for (std::size_t o = 0; o < instance.items(); ++o) {
      const auto& sharers = graph_.consumers_of(o);
      owner_[o] = sharers.front();
      if (sharers.size() < 2) continue;
      const int sign = sgn(instance.utility(sharers.front(), o));
      if (sign == 0) {
        throw InputError("item " + std::to_string(o) + " is shared and valued 0; resolve zero items first");
      }
      for (std::size_t k : sharers) {
        if (sgn(instance.utility(k, o)) != sign) {
          throw InputError("item " + std::to_string(o) + " is shared by agents valuing it with opposite signs");
        }
        ++shared_count_[k];
      }
      shared_[o] = true;
      ++remaining_;
    }
    for (std::size_t p : strategy_.preferred_roots) {
      if (p >= instance.agents()) throw InputError("preferred root " + std::to_string(p) + " is not an agent");
    }
  }

  IntegralAllocation run(RoundingTrace* trace) {
    while (remaining_ > 0) {
      const std::size_t root = pick_root();
      roots_.push_back(root);
      explore(root);
    }
    if (trace) {
      trace->roots = roots_;
      trace->activation_order = activation_order_;
      trace->predecessor_losses = losses_;
    }
    return IntegralAllocation(instance_.agents(), std::move(owner_));
  }

 private:
  std::size_t pick_root() const {
    for (std::size_t p : strategy_.preferred_roots) {
      if (shared_count_[p] > 0) return p;
    }
    for (std::size_t i = 0; i < instance_.agents(); ++i) {
      const bool eligible = strategy_.root_rule == RootRule::shares_one_item ? shared_count_[i] == 1
                                                                             : shared_count_[i] > 0;
      if (eligible) return i;
    }
    throw InternalError("no agent qualifies as a root although shared items remain");
  }

  void explore(std::size_t root) {
    std::deque<std::size_t> queue{root};
    std::vector<std::size_t> neighbors;
    while (!queue.empty()) {
      std::size_t j;
      if (strategy_.order == ExplorationOrder::breadth_first) {
        j = queue.front();
        queue.pop_front();
      } else {
        j = queue.back();
        queue.pop_back();
      }
      if (active_[j]) continue;
      active_[j] = true;
      activation_order_.push_back(j);

      neighbors.clear();
      for (std::size_t o : graph_.items_of(j)) {
        if (!shared_[o]) continue;
        for (std::size_t k : graph_.consumers_of(o)) {
          if (k != j && !active_[k]) neighbors.push_back(k);
        }
      }
      std::sort(neighbors.begin(), neighbors.end());
      neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
      queue.insert(queue.end(), neighbors.begin(), neighbors.end());

      for (std::size_t o : graph_.items_of(j)) {
        if (shared_[o]) settle(j, o);
      }
    }
  }

  // The active agent j takes good o, or hands chore o to its lowest-index
  // co-sharer.
  void settle(std::size_t j, std::size_t o) {
    const auto& sharers = graph_.consumers_of(o);
    std::size_t winner = j;
    if (sgn(instance_.utility(j, o)) < 0) {
      winner = sharers.front() != j ? sharers.front() : sharers[1];
    }
    owner_[o] = winner;
    shared_[o] = false;
    --remaining_;
    for (std::size_t k : sharers) {
      --shared_count_[k];
      if (k == j || active_[k]) continue;
      const int sign = sgn(instance_.utility(k, o));
      if ((sign > 0 && winner != k) || (sign < 0 && winner == k)) {
        if (++losses_[k] > 1) {
          throw InternalError("agent " + std::to_string(k) + " lost two shared items before becoming active");
        }
      }
    }
  }

  const Instance& instance_;
  ConsumptionGraph graph_;
  const ExplorationStrategy& strategy_;
  std::vector<std::size_t> owner_;
  std::vector<bool> shared_;
  std::vector<std::size_t> shared_count_;
  std::vector<bool> active_;
  std::vector<std::size_t> losses_;
  std::vector<std::size_t> roots_;
  std::vector<std::size_t> activation_order_;
  std::size_t remaining_ = 0;
};

}  // namespace

IntegralAllocation round_acyclic(const Instance& instance, const FractionalAllocation& x,
                                 const ExplorationStrategy& strategy, RoundingTrace* trace) {
  require_shape(instance, x);
  return Rounder(instance, x, strategy).run(trace);
}

}  // namespace fairmix
