#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairmix/instance.hpp"

namespace fairmix {

/// Which defining clause certified (or came closest to certifying) an agent.
enum class Clause {
  plain,        // the bundle itself meets the threshold
  add_item,     // bundle plus one unowned item
  remove_item,  // bundle minus one owned item
  none,         // nothing to adjust (no items at all)
};

/// Per-agent evidence. `value` is the utility reached via `clause`/`item`:
/// for a passing agent it meets `threshold`; for a failing agent it is the
/// best value the property allows, or (PROPX) the first violating adjustment.
struct AgentWitness {
  std::size_t agent = 0;
  bool holds = false;
  Clause clause = Clause::plain;
  std::optional<std::size_t> item;
  Rational value;
  Rational threshold;
};

struct PropertyReport {
  std::string property;
  bool holds = false;
  std::vector<AgentWitness> agents;
  /// Set by the brute-force PO check when a dominating allocation exists.
  std::optional<IntegralAllocation> dominating;
};

struct EnumerationOptions {
  std::uint64_t cap = 10'000'000;
  bool parallel = true;
};

/// u_i(x_i) >= u_i(O) b_i for every agent.
PropertyReport weighted_prop(const Instance& instance, const FractionalAllocation& x);

/// Weighted PROP1: each agent meets its share outright, after adding one
/// unowned item, or after removing one owned item.
PropertyReport weighted_prop1(const Instance& instance, const IntegralAllocation& pi);

/// PROPX with equal shares u_i(O)/n: the share survives dropping any owned
/// chore and is reached by adding any unowned good.
PropertyReport propx(const Instance& instance, const IntegralAllocation& pi);

/// y Pareto-dominates x: nobody worse off, somebody strictly better.
bool pareto_dominates(const Instance& instance, const FractionalAllocation& y, const FractionalAllocation& x);
bool pareto_dominates(const Instance& instance, const IntegralAllocation& y, const IntegralAllocation& x);

/// Brute force over all n^m integral allocations. Throws InputError when
/// n^m exceeds options.cap.
std::optional<IntegralAllocation> find_dominating_integral(const Instance& instance,
                                                           const IntegralAllocation& pi,
                                                           const EnumerationOptions& options = {});
bool is_pareto_optimal_integral(const Instance& instance, const IntegralAllocation& pi,
                                const EnumerationOptions& options = {});
PropertyReport pareto_optimality_report(const Instance& instance, const IntegralAllocation& pi,
                                        const EnumerationOptions& options = {});

/// Solves max sum_i (u_i(x'_i) - u_i(x_i)) over fractional x' dominating x
/// weakly; true iff the optimum is positive. x is fPO iff this is false.
bool pareto_improvement_exists(const Instance& instance, const FractionalAllocation& x);

struct WelfareWeights {
  std::vector<Rational> lambda;
};

/// Searches strictly positive weights (normalized lambda_i >= 1, minimal sum)
/// under which every consumer of every item has the highest lambda_i u_i(o).
/// A result certifies fPO; nullopt proves nothing.
std::optional<WelfareWeights> find_welfare_weights(const Instance& instance, const FractionalAllocation& x);

/// True when `weights` are positive and every consumer of every item attains
/// max_j lambda_j u_j(o), i.e. x maximizes the weighted welfare.
bool certifies(const Instance& instance, const FractionalAllocation& x, const WelfareWeights& weights);

const char* to_string(Clause clause);

}  // namespace fairmix
