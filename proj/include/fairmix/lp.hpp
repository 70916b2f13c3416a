#pragma once

#include <cstddef>
#include <vector>

#include "fairmix/rational.hpp"

namespace fairmix::lp {

enum class Relation { less_equal, equal, greater_equal };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

/// maximize objective . x  subject to constraints, x >= 0.
struct Problem {
  std::size_t variables = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;

  /// Throws InputError when a coefficient vector has the wrong length.
  void validate() const;
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
  Status status = Status::infeasible;
  Rational value;                    // valid when optimal
  std::vector<Rational> assignment;  // valid when optimal
  /// Structural variables that are basic in the final tableau, ascending.
  std::vector<std::size_t> basis;
};

/// Exact two-phase primal simplex with Bland's rule. The returned point is a
/// basic feasible solution, and the result depends only on the problem.
Solution solve(const Problem& problem);

/// True when `x` satisfies every constraint and bound exactly.
bool is_feasible(const Problem& problem, const std::vector<Rational>& x);

const char* to_string(Status status);

}  // namespace fairmix::lp
