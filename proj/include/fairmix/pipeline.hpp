#pragma once

#include <optional>

#include "fairmix/improve.hpp"
#include "fairmix/rounding.hpp"
#include "fairmix/verify.hpp"

namespace fairmix {

struct PipelineResult {
  IntegralAllocation allocation;
  /// The acyclic fPO allocation that was rounded.
  FractionalAllocation fractional;
  PropertyReport prop1;
  /// No fractional Pareto improvement of `allocation` exists.
  bool fpo_certified = false;
  /// Weights under which both `fractional` and `allocation` maximize welfare.
  std::optional<WelfareWeights> welfare_weights;
  std::size_t lp_solves = 0;
};

/// Equal-division seed, LP improvement to an acyclic fPO allocation, zero-item
/// resolution, then rounding; returns the allocation with its certificates.
PipelineResult rounding_pipeline(const Instance& instance, const ExplorationStrategy& strategy = {});

}  // namespace fairmix
