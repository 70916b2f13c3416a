#include "fairmix/verify.hpp"

#include <algorithm>

#include "fairmix/error.hpp"
#include "fairmix/graph.hpp"
#include "fairmix/kernels/enumeration.hpp"
#include "fairmix/lp.hpp"

namespace fairmix {

const char* to_string(Clause clause) {
  switch (clause) {
    case Clause::plain:
      return "plain";
    case Clause::add_item:
      return "add_item";
    case Clause::remove_item:
      return "remove_item";
    case Clause::none:
      return "none";
  }
  return "?";
}

PropertyReport weighted_prop(const Instance& instance, const FractionalAllocation& x) {
  require_shape(instance, x);
  PropertyReport report{"prop", true, {}, std::nullopt};
  for (std::size_t i = 0; i < instance.agents(); ++i) {
    AgentWitness w;
    w.agent = i;
    w.value = utility(instance, x, i);
    w.threshold = proportional_share(instance, i);
    w.holds = w.value >= w.threshold;
    report.holds = report.holds && w.holds;
    report.agents.push_back(std::move(w));
  }
  return report;
}

PropertyReport weighted_prop1(const Instance& instance, const IntegralAllocation& pi) {
  require_shape(instance, pi);
  PropertyReport report{"prop1", true, {}, std::nullopt};
  for (std::size_t i = 0; i < instance.agents(); ++i) {
    AgentWitness w;
    w.agent = i;
    w.threshold = proportional_share(instance, i);
    const Rational own = utility(instance, pi, i);
    w.value = own;
    if (own >= w.threshold) {
      w.holds = true;
    } else {
      // Best single adjustment: the most valuable unowned item, or the
      // least valuable owned one. Lowest index wins ties.
      std::optional<std::size_t> best_add;
      std::optional<std::size_t> best_remove;
      for (std::size_t o = 0; o < instance.items(); ++o) {
        const Rational& u = instance.utility(i, o);
        if (pi.owner(o) == i) {
          if (!best_remove || u < instance.utility(i, *best_remove)) best_remove = o;
        } else if (!best_add || u > instance.utility(i, *best_add)) {
          best_add = o;
        }
      }
      w.clause = Clause::none;
      if (best_add) {
        w.clause = Clause::add_item;
        w.item = best_add;
        w.value = own + instance.utility(i, *best_add);
      }
      if (best_remove) {
        Rational removed = own - instance.utility(i, *best_remove);
        if (!best_add || removed > w.value) {
          w.clause = Clause::remove_item;
          w.item = best_remove;
          w.value = std::move(removed);
        }
      }
      w.holds = w.value >= w.threshold;
    }
    report.holds = report.holds && w.holds;
    report.agents.push_back(std::move(w));
  }
  return report;
}

PropertyReport propx(const Instance& instance, const IntegralAllocation& pi) {
  require_shape(instance, pi);
  PropertyReport report{"propx", true, {}, std::nullopt};
  const Rational n(static_cast<unsigned long>(instance.agents()));
  for (std::size_t i = 0; i < instance.agents(); ++i) {
    AgentWitness w;
    w.agent = i;
    w.threshold = instance.total_utility(i) / n;
    const Rational own = utility(instance, pi, i);
    w.value = own;
    w.holds = true;
    for (std::size_t o = 0; o < instance.items() && w.holds; ++o) {
      const Rational& u = instance.utility(i, o);
      const bool owned = pi.owner(o) == i;
      if (owned && sgn(u) < 0 && own - u < w.threshold) {
        w.holds = false;
        w.clause = Clause::remove_item;
        w.item = o;
        w.value = own - u;
      } else if (!owned && sgn(u) > 0 && own + u < w.threshold) {
        w.holds = false;
        w.clause = Clause::add_item;
        w.item = o;
        w.value = own + u;
      }
    }
    report.holds = report.holds && w.holds;
    report.agents.push_back(std::move(w));
  }
  return report;
}

namespace {

bool dominates(const std::vector<Rational>& y, const std::vector<Rational>& x) {
  bool strict = false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < x[i]) return false;
    if (y[i] > x[i]) strict = true;
  }
  return strict;
}

}  // namespace

bool pareto_dominates(const Instance& instance, const FractionalAllocation& y, const FractionalAllocation& x) {
  require_shape(instance, y);
  require_shape(instance, x);
  return dominates(utilities(instance, y), utilities(instance, x));
}

bool pareto_dominates(const Instance& instance, const IntegralAllocation& y, const IntegralAllocation& x) {
  require_shape(instance, y);
  require_shape(instance, x);
  return dominates(utilities(instance, y), utilities(instance, x));
}

namespace {

template <typename Value>
std::optional<std::uint64_t> run_dominating(const kernels::ValueTable<Value>& table,
                                            const std::vector<std::size_t>& owner, std::uint64_t total,
                                            bool parallel) {
  std::vector<Value> baseline(table.agents, Value(0));
  for (std::size_t o = 0; o < owner.size(); ++o) baseline[owner[o]] += table.value(owner[o], o);
  return parallel ? kernels::first_dominating_parallel(table, baseline, total)
                  : kernels::first_dominating_serial(table, baseline, total);
}

}  // namespace

std::optional<IntegralAllocation> find_dominating_integral(const Instance& instance,
                                                           const IntegralAllocation& pi,
                                                           const EnumerationOptions& options) {
  require_shape(instance, pi);
  const auto total = kernels::allocation_count(instance.agents(), instance.items(), options.cap);
  if (!total) {
    throw InputError("brute-force enumeration exceeds the cap of " + std::to_string(options.cap) +
                     " allocations");
  }
  const std::vector<Rational> no_thresholds(instance.agents(), Rational(0));
  std::optional<std::uint64_t> index;
  if (auto table = kernels::integer_table(instance, no_thresholds)) {
    index = run_dominating(*table, pi.owners(), *total, options.parallel);
  } else {
    index = run_dominating(kernels::exact_table(instance, no_thresholds), pi.owners(), *total, options.parallel);
  }
  if (!index) return std::nullopt;
  return IntegralAllocation(instance.agents(), kernels::decode(*index, instance.agents(), instance.items()));
}

bool is_pareto_optimal_integral(const Instance& instance, const IntegralAllocation& pi,
                                const EnumerationOptions& options) {
  return !find_dominating_integral(instance, pi, options).has_value();
}

PropertyReport pareto_optimality_report(const Instance& instance, const IntegralAllocation& pi,
                                        const EnumerationOptions& options) {
  PropertyReport report{"po", true, {}, find_dominating_integral(instance, pi, options)};
  report.holds = !report.dominating.has_value();
  return report;
}

bool pareto_improvement_exists(const Instance& instance, const FractionalAllocation& x) {
  require_shape(instance, x);
  const std::size_t n = instance.agents();
  const std::size_t m = instance.items();
  lp::Problem problem;
  problem.variables = n * m;
  problem.objective.assign(n * m, Rational(0));
  const auto current = utilities(instance, x);
  for (std::size_t i = 0; i < n; ++i) {
    lp::Constraint keep{std::vector<Rational>(n * m, Rational(0)), lp::Relation::greater_equal, current[i]};
    for (std::size_t o = 0; o < m; ++o) {
      keep.coefficients[i * m + o] = instance.utility(i, o);
      problem.objective[i * m + o] = instance.utility(i, o);
    }
    problem.constraints.push_back(std::move(keep));
  }
  for (std::size_t o = 0; o < m; ++o) {
    lp::Constraint column{std::vector<Rational>(n * m, Rational(0)), lp::Relation::equal, Rational(1)};
    for (std::size_t i = 0; i < n; ++i) column.coefficients[i * m + o] = 1;
    problem.constraints.push_back(std::move(column));
  }
  const auto solution = lp::solve(problem);
  if (solution.status != lp::Status::optimal) {
    throw InternalError(std::string("improvement LP is ") + lp::to_string(solution.status));
  }
  Rational baseline = 0;
  for (const auto& u : current) baseline += u;
  return solution.value > baseline;
}

std::optional<WelfareWeights> find_welfare_weights(const Instance& instance, const FractionalAllocation& x) {
  require_shape(instance, x);
  const std::size_t n = instance.agents();
  const ConsumptionGraph graph(x);
  lp::Problem problem;
  problem.variables = n;
  problem.objective.assign(n, Rational(-1));
  for (std::size_t i = 0; i < n; ++i) {
    lp::Constraint floor{std::vector<Rational>(n, Rational(0)), lp::Relation::greater_equal, Rational(1)};
    floor.coefficients[i] = 1;
    problem.constraints.push_back(std::move(floor));
  }
  for (std::size_t o = 0; o < instance.items(); ++o) {
    for (std::size_t i : graph.consumers_of(o)) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const Rational& ui = instance.utility(i, o);
        const Rational& uj = instance.utility(j, o);
        if (sgn(ui) == 0 && sgn(uj) == 0) continue;
        lp::Constraint best{std::vector<Rational>(n, Rational(0)), lp::Relation::greater_equal, Rational(0)};
        best.coefficients[i] = ui;
        best.coefficients[j] = -uj;
        problem.constraints.push_back(std::move(best));
      }
    }
  }
  auto solution = lp::solve(problem);
  if (solution.status != lp::Status::optimal) return std::nullopt;
  return WelfareWeights{std::move(solution.assignment)};
}

bool certifies(const Instance& instance, const FractionalAllocation& x, const WelfareWeights& weights) {
  require_shape(instance, x);
  if (weights.lambda.size() != instance.agents()) return false;
  for (const auto& l : weights.lambda) {
    if (sgn(l) <= 0) return false;
  }
  const ConsumptionGraph graph(x);
  for (std::size_t o = 0; o < instance.items(); ++o) {
    Rational best = weights.lambda[0] * instance.utility(0, o);
    for (std::size_t j = 1; j < instance.agents(); ++j) {
      Rational v = weights.lambda[j] * instance.utility(j, o);
      if (v > best) best = std::move(v);
    }
    for (std::size_t i : graph.consumers_of(o)) {
      if (weights.lambda[i] * instance.utility(i, o) != best) return false;
    }
  }
  return true;
}

}  // namespace fairmix
