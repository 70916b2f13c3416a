#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fairmix/cli/documents.hpp"

namespace fairmix::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_violated = 1,
  exit_input_error = 2,
  exit_internal_error = 3,
};

enum class WeightMode { equal, random };

struct GenOptions {
  std::size_t agents = 3;
  std::size_t items = 5;
  long long min_utility = -5;
  long long max_utility = 5;
  WeightMode weights = WeightMode::equal;
  std::uint64_t seed = 0;
};

/// Reproducible random instance. Agents are "1".."n", items "o1".."om";
/// random weights are integers in [1,10] (normalized when loaded).
InstanceDocument generate_instance(const GenOptions& options);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fairmix::cli
