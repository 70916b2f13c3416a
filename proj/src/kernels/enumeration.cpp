#include "fairmix/kernels/enumeration.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fairmix::kernels {

ValueTable<Rational> exact_table(const Instance& instance, const std::vector<Rational>& thresholds) {
  ValueTable<Rational> table;
  table.agents = instance.agents();
  table.items = instance.items();
  table.values.reserve(table.agents * table.items);
  for (std::size_t i = 0; i < table.agents; ++i) {
    for (const auto& u : instance.utilities().row(i)) table.values.push_back(u);
  }
  table.thresholds = thresholds;
  return table;
}

std::optional<ValueTable<std::int64_t>> integer_table(const Instance& instance,
                                                      const std::vector<Rational>& thresholds) {
  // Sums of up to m+1 scaled values must stay below 2^62.
  const mpz_class limit = mpz_class(1) << 62;
  ValueTable<std::int64_t> table;
  table.agents = instance.agents();
  table.items = instance.items();
  table.values.reserve(table.agents * table.items);
  for (std::size_t i = 0; i < table.agents; ++i) {
    mpz_class scale = thresholds[i].get_den();
    for (const auto& u : instance.utilities().row(i)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), u.get_den().get_mpz_t());
    mpz_class magnitude = 0;
    auto scaled = [&](const Rational& q) {
      mpz_class v = q.get_num() * (scale / q.get_den());
      magnitude += abs(v);
      return v;
    };
    std::vector<mpz_class> row;
    for (const auto& u : instance.utilities().row(i)) row.push_back(scaled(u));
    const mpz_class threshold = scaled(thresholds[i]);
    if (magnitude >= limit) return std::nullopt;
    for (const auto& v : row) table.values.push_back(v.get_si());
    table.thresholds.push_back(threshold.get_si());
  }
  return table;
}

std::optional<std::uint64_t> allocation_count(std::size_t agents, std::size_t items, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t o = 0; o < items; ++o) {
    if (agents != 0 && total > cap / agents) return std::nullopt;
    total *= agents;
  }
  if (total > cap) return std::nullopt;
  return total;
}

std::vector<std::size_t> decode(std::uint64_t index, std::size_t agents, std::size_t items) {
  std::vector<std::size_t> owner(items, 0);
  for (std::size_t o = 0; o < items; ++o) {
    owner[o] = static_cast<std::size_t>(index % agents);
    index /= agents;
  }
  return owner;
}

namespace {

// Advances owner to the next allocation index.
void increment(std::vector<std::size_t>& owner, std::size_t agents) {
  for (auto& digit : owner) {
    if (++digit < agents) return;
    digit = 0;
  }
}

template <typename Value>
void agent_utilities(const ValueTable<Value>& table, const std::vector<std::size_t>& owner,
                     std::vector<Value>& out) {
  std::fill(out.begin(), out.end(), Value(0));
  for (std::size_t o = 0; o < owner.size(); ++o) out[owner[o]] += table.value(owner[o], o);
}

template <typename Value>
bool dominates(const std::vector<Value>& candidate, const std::vector<Value>& baseline) {
  bool strict = false;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    if (candidate[i] < baseline[i]) return false;
    if (candidate[i] > baseline[i]) strict = true;
  }
  return strict;
}

}  // namespace

template <typename Value>
bool satisfies(const ValueTable<Value>& table, const std::vector<std::size_t>& owner, Property property) {
  for (std::size_t i = 0; i < table.agents; ++i) {
    Value own(0);
    for (std::size_t o = 0; o < owner.size(); ++o) {
      if (owner[o] == i) own += table.value(i, o);
    }
    const Value& threshold = table.thresholds[i];
    switch (property) {
      case Property::prop:
        if (own < threshold) return false;
        break;
      case Property::prop1: {
        if (own >= threshold) break;
        bool rescued = false;
        for (std::size_t o = 0; o < owner.size() && !rescued; ++o) {
          const Value& v = table.value(i, o);
          // Adding an outside item or dropping an owned one.
          Value adjusted = owner[o] == i ? Value(own - v) : Value(own + v);
          rescued = adjusted >= threshold;
        }
        if (!rescued) return false;
        break;
      }
      case Property::propx:
        for (std::size_t o = 0; o < owner.size(); ++o) {
          const Value& v = table.value(i, o);
          if (owner[o] == i && v < 0 && Value(own - v) < threshold) return false;
          if (owner[o] != i && v > 0 && Value(own + v) < threshold) return false;
        }
        break;
    }
  }
  return true;
}

template <typename Value>
std::optional<std::uint64_t> first_dominating_serial(const ValueTable<Value>& table,
                                                     const std::vector<Value>& baseline,
                                                     std::uint64_t total) {
  std::vector<std::size_t> owner(table.items, 0);
  std::vector<Value> current(table.agents);
  for (std::uint64_t k = 0; k < total; ++k) {
    agent_utilities(table, owner, current);
    if (dominates(current, baseline)) return k;
    increment(owner, table.agents);
  }
  return std::nullopt;
}

template <typename Value>
std::optional<std::uint64_t> first_dominating_parallel(const ValueTable<Value>& table,
                                                       const std::vector<Value>& baseline,
                                                       std::uint64_t total) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel
  {
    std::uint64_t threads = 1;
    std::uint64_t id = 0;
#ifdef _OPENMP
    threads = static_cast<std::uint64_t>(omp_get_num_threads());
    id = static_cast<std::uint64_t>(omp_get_thread_num());
#endif
    const std::uint64_t chunk = (total + threads - 1) / threads;
    const std::uint64_t begin = std::min(total, id * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    std::vector<std::size_t> owner = decode(begin, table.agents, table.items);
    std::vector<Value> current(table.agents);
    for (std::uint64_t k = begin; k < end; ++k) {
      agent_utilities(table, owner, current);
      if (dominates(current, baseline)) {
#pragma omp critical(fairmix_first_dominating)
        best = std::min(best, k);
        break;
      }
      increment(owner, table.agents);
    }
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return best;
}

template <typename Value>
SearchResult count_satisfying_serial(const ValueTable<Value>& table, Property property, std::uint64_t total) {
  SearchResult result;
  result.total = total;
  std::vector<std::size_t> owner(table.items, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    if (satisfies(table, owner, property)) {
      if (!result.first) result.first = k;
      ++result.satisfying;
    }
    increment(owner, table.agents);
  }
  return result;
}

template <typename Value>
SearchResult count_satisfying_parallel(const ValueTable<Value>& table, Property property, std::uint64_t total) {
  std::uint64_t count = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel reduction(+ : count) reduction(min : first)
  {
    std::uint64_t threads = 1;
    std::uint64_t id = 0;
#ifdef _OPENMP
    threads = static_cast<std::uint64_t>(omp_get_num_threads());
    id = static_cast<std::uint64_t>(omp_get_thread_num());
#endif
    const std::uint64_t chunk = (total + threads - 1) / threads;
    const std::uint64_t begin = std::min(total, id * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    std::vector<std::size_t> owner = decode(begin, table.agents, table.items);
    for (std::uint64_t k = begin; k < end; ++k) {
      if (satisfies(table, owner, property)) {
        first = std::min(first, k);
        ++count;
      }
      increment(owner, table.agents);
    }
  }
  SearchResult result;
  result.total = total;
  result.satisfying = count;
  if (first != std::numeric_limits<std::uint64_t>::max()) result.first = first;
  return result;
}

#define FAIRMIX_INSTANTIATE(Value)                                                                        \
  template bool satisfies(const ValueTable<Value>&, const std::vector<std::size_t>&, Property);           \
  template std::optional<std::uint64_t> first_dominating_serial(const ValueTable<Value>&,                 \
                                                                const std::vector<Value>&, std::uint64_t); \
  template std::optional<std::uint64_t> first_dominating_parallel(                                        \
      const ValueTable<Value>&, const std::vector<Value>&, std::uint64_t);                                \
  template SearchResult count_satisfying_serial(const ValueTable<Value>&, Property, std::uint64_t);       \
  template SearchResult count_satisfying_parallel(const ValueTable<Value>&, Property, std::uint64_t);

FAIRMIX_INSTANTIATE(std::int64_t)
FAIRMIX_INSTANTIATE(Rational)

#undef FAIRMIX_INSTANTIATE

}  // namespace fairmix::kernels
