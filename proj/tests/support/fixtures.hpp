#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fairmix/cli/commands.hpp"
#include "fairmix/cli/documents.hpp"
#include "fairmix/instance.hpp"

namespace fairmix::testing {

inline std::string data_path(const std::string& name) { return std::string(FAIRMIX_DATA_DIR) + "/" + name; }

inline cli::InstanceDocument load_document(const std::string& name) {
  return cli::parse_instance_document(cli::read_json_file(data_path(name)));
}

inline IntegralAllocation load_allocation(const std::string& name, const cli::InstanceDocument& doc) {
  return cli::parse_allocation(cli::read_json_file(data_path(name)), doc);
}

/// Instance from integer utilities; weights default to equal.
inline Instance make_instance(std::initializer_list<std::initializer_list<long>> rows,
                              std::vector<Rational> weights = {}) {
  const std::size_t n = rows.size();
  const std::size_t m = n ? rows.begin()->size() : 0;
  Matrix<Rational> u(n, m);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t o = 0;
    for (long v : row) u(i, o++) = v;
    ++i;
  }
  if (weights.empty()) weights.assign(n, Rational(1));
  return Instance(std::move(weights), std::move(u));
}

inline Instance random_instance(std::size_t n, std::size_t m, std::uint64_t seed, bool random_weights,
                                long lo = -5, long hi = 5) {
  cli::GenOptions options;
  options.agents = n;
  options.items = m;
  options.min_utility = lo;
  options.max_utility = hi;
  options.weights = random_weights ? cli::WeightMode::random : cli::WeightMode::equal;
  options.seed = seed;
  return cli::to_instance(cli::generate_instance(options));
}

/// Five agents, items a..h. Utility signs follow the rounding example's
/// table; the fractional allocation realizes its consumption forest:
///   2 - a - 1 - b,  1 - c - 5 - h,  2 - d;   3 - e,  3 - f - 4,  3 - g.
/// Agents 1..5 map to indices 0..4, items a..h to 0..7.
struct RoundingExample {
  Instance instance;
  FractionalAllocation allocation;
};

inline RoundingExample rounding_example() {
  //                a   b   c   d   e   f   g   h
  Instance instance = make_instance({{3, 2, -2, 1, -1, 1, 2, 1},
                                     {4, -1, -1, 3, -2, 2, 1, 1},
                                     {1, 1, -3, -1, -2, 4, 3, -1},
                                     {-1, 2, -1, -2, -1, 3, 1, -2},
                                     {-2, -1, -4, 1, -1, -1, 1, 5}});
  Matrix<Rational> x(5, 8, Rational(0));
  const Rational half(1, 2);
  x(0, 0) = half;  // a: agents 1 and 2
  x(1, 0) = half;
  x(0, 1) = 1;     // b: agent 1
  x(0, 2) = half;  // c: agents 1 and 5
  x(4, 2) = half;
  x(1, 3) = 1;     // d: agent 2
  x(2, 4) = 1;     // e: agent 3
  x(2, 5) = half;  // f: agents 3 and 4
  x(3, 5) = half;
  x(2, 6) = 1;     // g: agent 3
  x(4, 7) = 1;     // h: agent 5
  return {std::move(instance), FractionalAllocation(std::move(x))};
}

}  // namespace fairmix::testing
