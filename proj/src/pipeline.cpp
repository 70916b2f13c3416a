#include "fairmix/pipeline.hpp"

#include "fairmix/error.hpp"

namespace fairmix {

PipelineResult rounding_pipeline(const Instance& instance, const ExplorationStrategy& strategy) {
  const FractionalAllocation seed = proportional_seed(instance);
  ImprovementState improved = improve_to_acyclic_fpo(instance, seed);
  const FractionalAllocation resolved = resolve_zero_items(instance, improved.allocation);
  IntegralAllocation allocation = round_acyclic(instance, resolved, strategy);

  const FractionalAllocation as_fractional(allocation);
  auto weights = find_welfare_weights(instance, improved.allocation);
  if (weights && !certifies(instance, as_fractional, *weights)) {
    throw InternalError("welfare weights of the fractional allocation do not carry over to its rounding");
  }
  PipelineResult result{std::move(allocation),
                        std::move(improved.allocation),
                        {},
                        !pareto_improvement_exists(instance, as_fractional),
                        std::move(weights),
                        improved.lp_solves};
  result.prop1 = weighted_prop1(instance, result.allocation);
  return result;
}

}  // namespace fairmix
