#pragma once

// Exhaustive enumeration over all n^m integral allocations. Every kernel comes
// as a serial reference and an OpenMP version; both return identical results.
//
// Allocation k assigns item o to digit o of k written in base n (item 0 is
// the least significant digit).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fairmix/instance.hpp"

namespace fairmix::kernels {

/// Per-agent utilities and thresholds, each agent's row multiplied by one
/// positive constant. Comparisons within an agent are unchanged by scaling.
template <typename Value>
struct ValueTable {
  std::size_t agents = 0;
  std::size_t items = 0;
  std::vector<Value> values;      // agent-major, agents x items
  std::vector<Value> thresholds;  // per agent

  const Value& value(std::size_t agent, std::size_t item) const { return values[agent * items + item]; }
};

/// Exact table over Rational.
ValueTable<Rational> exact_table(const Instance& instance, const std::vector<Rational>& thresholds);

/// Integer table when every scaled row fits comfortably in 64 bits, else nullopt.
std::optional<ValueTable<std::int64_t>> integer_table(const Instance& instance,
                                                      const std::vector<Rational>& thresholds);

/// n^m, or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> allocation_count(std::size_t agents, std::size_t items, std::uint64_t cap);

/// Decodes allocation index k.
std::vector<std::size_t> decode(std::uint64_t index, std::size_t agents, std::size_t items);

enum class Property { prop, prop1, propx };

struct SearchResult {
  std::uint64_t total = 0;
  std::uint64_t satisfying = 0;
  std::optional<std::uint64_t> first;  // lowest satisfying index
};

/// Lowest index of an allocation Pareto-dominating `baseline` (per-agent
/// utilities on the table's scale), or nullopt.
template <typename Value>
std::optional<std::uint64_t> first_dominating_serial(const ValueTable<Value>& table,
                                                     const std::vector<Value>& baseline,
                                                     std::uint64_t total);
template <typename Value>
std::optional<std::uint64_t> first_dominating_parallel(const ValueTable<Value>& table,
                                                       const std::vector<Value>& baseline,
                                                       std::uint64_t total);

/// Counts allocations satisfying `property` against the table's thresholds.
template <typename Value>
SearchResult count_satisfying_serial(const ValueTable<Value>& table, Property property, std::uint64_t total);
template <typename Value>
SearchResult count_satisfying_parallel(const ValueTable<Value>& table, Property property, std::uint64_t total);

/// Whether one owner vector satisfies `property` on the table's scale.
template <typename Value>
bool satisfies(const ValueTable<Value>& table, const std::vector<std::size_t>& owner, Property property);

}  // namespace fairmix::kernels
