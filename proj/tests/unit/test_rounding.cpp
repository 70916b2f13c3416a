#include <random>

#include "doctest.h"

#include "fairmix/error.hpp"
#include "fairmix/graph.hpp"
#include "fairmix/pipeline.hpp"
#include "fairmix/rounding.hpp"
#include "fixtures.hpp"
#include "grouped_po.hpp"

using namespace fairmix;
using fairmix::testing::make_instance;

namespace {

FractionalAllocation fractional(std::size_t n, std::size_t m,
                                std::initializer_list<std::tuple<std::size_t, std::size_t, Rational>> entries) {
  Matrix<Rational> x(n, m, Rational(0));
  for (const auto& [i, o, v] : entries) x(i, o) = v;
  return FractionalAllocation(std::move(x));
}

const std::vector<ExplorationStrategy> kAllStrategies = {
    {ExplorationOrder::breadth_first, RootRule::shares_one_item, {}},
    {ExplorationOrder::breadth_first, RootRule::lowest_index, {}},
    {ExplorationOrder::depth_first, RootRule::shares_one_item, {}},
    {ExplorationOrder::depth_first, RootRule::lowest_index, {}},
};

}  // namespace

TEST_CASE("zero-item resolution") {
  const Rational half = make_rational(1, 2);
  SUBCASE("nothing to resolve") {
    const Instance inst = make_instance({{1, 2}, {3, 1}});
    const auto x = fractional(2, 2, {{0, 0, half}, {1, 0, half}, {1, 1, Rational(1)}});
    CHECK(resolve_zero_items(inst, x) == x);
  }
  SUBCASE("zero item goes to the lower sharer") {
    const Instance inst = make_instance({{0, 5}, {0, 1}});
    const auto x = fractional(2, 2, {{0, 0, half}, {1, 0, half}, {0, 1, Rational(1)}});
    const auto y = resolve_zero_items(inst, x);
    CHECK(y(0, 0) == 1);
    CHECK(y(1, 0) == 0);
    CHECK(y(0, 1) == 1);
    CHECK(utilities(inst, y) == utilities(inst, x));
  }
  SUBCASE("sharers 2 and 4") {
    const Instance inst = make_instance({{1}, {0}, {1}, {0}});
    const auto x = fractional(4, 1, {{1, 0, make_rational(1, 3)}, {3, 0, make_rational(2, 3)}});
    const auto y = resolve_zero_items(inst, x);
    CHECK(y(1, 0) == 1);
    CHECK(y(3, 0) == 0);
  }
  SUBCASE("an unshared zero item stays with its owner") {
    const Instance inst = make_instance({{1, 0}, {0, 1}});
    const auto x = fractional(2, 2, {{1, 0, Rational(1)}, {0, 1, Rational(1)}});
    CHECK(resolve_zero_items(inst, x) == x);
  }
  SUBCASE("a zero sharer next to a nonzero sharer is rejected") {
    const Instance inst = make_instance({{0}, {3}});
    const auto x = fractional(2, 1, {{0, 0, half}, {1, 0, half}});
    CHECK_THROWS_AS(resolve_zero_items(inst, x), InputError);
  }
}

TEST_CASE("rounding example, default strategy") {
  const auto ex = fairmix::testing::rounding_example();
  RoundingTrace trace;
  const auto pi = round_acyclic(ex.instance, ex.allocation, {}, &trace);
  //                                             a  b  c  d  e  f  g  h
  CHECK(pi.owners() == std::vector<std::size_t>{1, 0, 4, 1, 2, 2, 2, 4});
  CHECK(pi.bundle(3).empty());
  CHECK(trace.roots == std::vector<std::size_t>{1, 2});
  CHECK(trace.activation_order == std::vector<std::size_t>{1, 0, 4, 2, 3});
  for (std::size_t losses : trace.predecessor_losses) CHECK(losses <= 1);
}

TEST_CASE("rounding example, roots forced to agents 1 and 4") {
  const auto ex = fairmix::testing::rounding_example();
  ExplorationStrategy strategy;
  strategy.preferred_roots = {0, 3};
  RoundingTrace trace;
  const auto pi = round_acyclic(ex.instance, ex.allocation, strategy, &trace);
  CHECK(pi.owners() == std::vector<std::size_t>{0, 0, 4, 1, 2, 3, 2, 4});
  CHECK(trace.roots == std::vector<std::size_t>{0, 3});
  for (std::size_t losses : trace.predecessor_losses) CHECK(losses <= 1);
}

TEST_CASE("rounding example under every order and root rule keeps edges") {
  const auto ex = fairmix::testing::rounding_example();
  const ConsumptionGraph input(ex.allocation);
  for (const auto& strategy : kAllStrategies) {
    RoundingTrace trace;
    const auto pi = round_acyclic(ex.instance, ex.allocation, strategy, &trace);
    for (std::size_t o = 0; o < pi.items(); ++o) CHECK(input.has_edge(pi.owner(o), o));
    for (std::size_t losses : trace.predecessor_losses) CHECK(losses <= 1);
  }
}

TEST_CASE("integral input passes through") {
  const Instance inst = make_instance({{1, -2, 3}, {2, 2, -1}});
  const IntegralAllocation pi(2, {1, 0, 0});
  RoundingTrace trace;
  CHECK(round_acyclic(inst, FractionalAllocation(pi), {}, &trace) == pi);
  CHECK(trace.roots.empty());
}

TEST_CASE("rounding rejects violated preconditions") {
  const Rational half = make_rational(1, 2);
  SUBCASE("cycle") {
    const Instance inst = make_instance({{1, 1}, {1, 1}});
    const auto x = fractional(2, 2, {{0, 0, half}, {1, 0, half}, {0, 1, half}, {1, 1, half}});
    CHECK_THROWS_AS(round_acyclic(inst, x), InputError);
  }
  SUBCASE("unresolved zero item") {
    const Instance inst = make_instance({{0}, {0}});
    CHECK_THROWS_AS(round_acyclic(inst, fractional(2, 1, {{0, 0, half}, {1, 0, half}})), InputError);
  }
  SUBCASE("mixed-sign shared item") {
    const Instance inst = make_instance({{2}, {-1}});
    CHECK_THROWS_AS(round_acyclic(inst, fractional(2, 1, {{0, 0, half}, {1, 0, half}})), InputError);
  }
}

TEST_CASE("a shared chore goes to the lowest-index co-sharer") {
  // Star: agent 0 shares chore 0 with agents 1 and 2.
  const Instance inst = make_instance({{-1, 1}, {-2, 0}, {-3, 0}});
  const auto x = fractional(3, 2, {{0, 0, make_rational(1, 3)},
                                   {1, 0, make_rational(1, 3)},
                                   {2, 0, make_rational(1, 3)},
                                   {0, 1, Rational(1)}});
  ExplorationStrategy strategy;
  strategy.root_rule = RootRule::lowest_index;
  CHECK(round_acyclic(inst, x, strategy).owner(0) == 1);
}

TEST_CASE("pipeline on a single agent") {
  const Instance inst = make_instance({{3, -1, 0}});
  const auto r = rounding_pipeline(inst);
  CHECK(r.allocation.owners() == std::vector<std::size_t>{0, 0, 0});
  CHECK(r.prop1.holds);
  CHECK(r.fpo_certified);
  REQUIRE(r.welfare_weights);
  CHECK(r.welfare_weights->lambda == std::vector<Rational>{1});
}

TEST_CASE("pipeline on the goods and chores examples") {
  for (const char* name : {"fixtures/example1_goods.json", "fixtures/example2_chores.json"}) {
    CAPTURE(name);
    const Instance inst = cli::to_instance(fairmix::testing::load_document(name));
    const auto r = rounding_pipeline(inst);
    CHECK(weighted_prop1(inst, r.allocation).holds);
    CHECK(fairmix::testing::pareto_optimal_by_item_classes(inst, r.allocation));
    CHECK(!pareto_improvement_exists(inst, FractionalAllocation(r.allocation)));
    REQUIRE(r.welfare_weights);
    CHECK(certifies(inst, r.fractional, *r.welfare_weights));
  }
}

TEST_CASE("item-class PO oracle agrees with plain enumeration") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t m = 1 + rng() % 5;
    const Instance inst = fairmix::testing::random_instance(n, m, rng(), false, -1, 1);
    std::vector<std::size_t> owner(m);
    for (auto& o : owner) o = rng() % n;
    const IntegralAllocation pi(n, owner);
    CHECK(fairmix::testing::pareto_optimal_by_item_classes(inst, pi) == is_pareto_optimal_integral(inst, pi));
  }
}

TEST_CASE("rounding guarantees hold for every strategy on random instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t m = 1 + rng() % 5;
    const Instance inst = fairmix::testing::random_instance(n, m, rng(), trial % 2 == 0);
    const auto state = improve_to_acyclic_fpo(inst, proportional_seed(inst));
    const auto x = resolve_zero_items(inst, state.allocation);
    CHECK(utilities(inst, x) == utilities(inst, state.allocation));
    const ConsumptionGraph input(x);
    for (const auto& strategy : kAllStrategies) {
      RoundingTrace trace;
      const auto pi = round_acyclic(inst, x, strategy, &trace);
      for (std::size_t o = 0; o < m; ++o) CHECK(input.has_edge(pi.owner(o), o));
      for (std::size_t losses : trace.predecessor_losses) CHECK(losses <= 1);
      CHECK(weighted_prop1(inst, pi).holds);
      CHECK(!pareto_improvement_exists(inst, FractionalAllocation(pi)));
      CHECK(is_pareto_optimal_integral(inst, pi));
    }
    const auto weights = find_welfare_weights(inst, x);
    REQUIRE(weights);
    CHECK(certifies(inst, FractionalAllocation(round_acyclic(inst, x)), *weights));
  }
}
