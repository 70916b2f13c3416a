#include <random>

#include "doctest.h"

#include "fairmix/error.hpp"
#include "fairmix/graph.hpp"
#include "fairmix/improve.hpp"
#include "fairmix/verify.hpp"
#include "fixtures.hpp"
#include "lp_oracle.hpp"

using namespace fairmix;
using fairmix::testing::make_instance;

namespace {

Rational welfare(const Instance& inst, const FractionalAllocation& x) {
  Rational total = 0;
  for (std::size_t i = 0; i < inst.agents(); ++i) total += utility(inst, x, i);
  return total;
}

// The goods example's identical small items merge into three divisible
// bundles A, B, C without changing the LP optimum. Written out by hand.
lp::Problem aggregated_goods_lp() {
  const Rational u[3][3] = {{make_rational(3, 10), make_rational(2, 10), make_rational(5, 10)},
                            {make_rational(34, 100), make_rational(16, 100), make_rational(5, 10)},
                            {make_rational(16, 100), make_rational(5, 10), make_rational(34, 100)}};
  lp::Problem p;
  p.variables = 9;
  for (int i = 0; i < 3; ++i) {
    for (int o = 0; o < 3; ++o) p.objective.push_back(u[i][o]);
  }
  for (int i = 0; i < 3; ++i) {
    lp::Constraint c{std::vector<Rational>(9, Rational(0)), lp::Relation::greater_equal, make_rational(1, 3)};
    for (int o = 0; o < 3; ++o) c.coefficients[i * 3 + o] = u[i][o];
    p.constraints.push_back(c);
  }
  for (int o = 0; o < 3; ++o) {
    lp::Constraint c{std::vector<Rational>(9, Rational(0)), lp::Relation::equal, Rational(1)};
    for (int i = 0; i < 3; ++i) c.coefficients[i * 3 + o] = 1;
    p.constraints.push_back(c);
  }
  return p;
}

// Welfare optimum frozen from the vertex-enumeration oracle above.
const Rational kGoodsExampleOptimum = make_rational(67, 50);

}  // namespace

TEST_CASE("proportional seed") {
  const Instance equal = make_instance({{1, 2}, {3, 4}, {5, 6}});
  const auto x = proportional_seed(equal);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t o = 0; o < 2; ++o) CHECK(x(i, o) == make_rational(1, 3));
    CHECK(utility(equal, x, i) == proportional_share(equal, i));
  }
  const Instance skewed = make_instance({{1}, {1}, {1}}, {Rational(2), Rational(1), Rational(1)});
  const auto y = proportional_seed(skewed);
  CHECK(y(0, 0) == make_rational(1, 2));
  CHECK(y(1, 0) == make_rational(1, 4));
  CHECK(y(2, 0) == make_rational(1, 4));
  const auto z = proportional_seed(make_instance({{4, -2, 7}}));
  for (std::size_t o = 0; o < 3; ++o) CHECK(z(0, o) == 1);
}

TEST_CASE("LP_T structure") {
  SUBCASE("single agent takes everything") {
    const Instance inst = make_instance({{3, -1, 2}});
    const auto s = lp::solve(build_lp_t(inst, proportional_seed(inst), {}));
    REQUIRE(s.status == lp::Status::optimal);
    CHECK(s.value == 4);
    CHECK(s.assignment == std::vector<Rational>{1, 1, 1});
  }
  SUBCASE("all-zero utilities") {
    const Instance inst = make_instance({{0, 0}, {0, 0}});
    const auto problem = build_lp_t(inst, proportional_seed(inst), {});
    const auto s = lp::solve(problem);
    REQUIRE(s.status == lp::Status::optimal);
    CHECK(s.value == 0);
    CHECK(fairmix::testing::is_vertex(problem, s.assignment));
  }
  SUBCASE("the seed is feasible for its own LP") {
    const auto doc = fairmix::testing::load_document("fixtures/example1_goods.json");
    const Instance inst = cli::to_instance(doc);
    const auto seed = proportional_seed(inst);
    const auto problem = build_lp_t(inst, seed, {});
    std::vector<Rational> flat;
    for (std::size_t i = 0; i < inst.agents(); ++i) {
      for (std::size_t o = 0; o < inst.items(); ++o) flat.push_back(seed(i, o));
    }
    CHECK(fairmix::testing::satisfies_all(problem, flat));
    CHECK(problem.constraints.size() == inst.agents() + inst.items());
  }
  SUBCASE("forbidden pairs become zero rows") {
    const Instance inst = make_instance({{1, 2}, {2, 1}});
    const auto problem = build_lp_t(inst, proportional_seed(inst), {{0, 1}});
    REQUIRE(problem.constraints.size() == 5);
    const auto& zero = problem.constraints.back();
    CHECK(zero.relation == lp::Relation::equal);
    CHECK(zero.rhs == 0);
    CHECK(zero.coefficients[lp_variable(inst, 0, 1)] == 1);
  }
}

TEST_CASE("vertex-enumeration oracle for the goods example") {
  const auto oracle = fairmix::testing::enumerate_vertices(aggregated_goods_lp());
  REQUIRE(oracle.status == lp::Status::optimal);
  CHECK(oracle.value == kGoodsExampleOptimum);
}

TEST_CASE("improvement on the goods example reaches the oracle optimum") {
  const auto doc = fairmix::testing::load_document("fixtures/example1_goods.json");
  const Instance inst = cli::to_instance(doc);
  const auto seed = proportional_seed(inst);
  const auto state = improve_to_acyclic_fpo(inst, seed);
  CHECK(state.optimum == kGoodsExampleOptimum);
  CHECK(welfare(inst, state.allocation) == kGoodsExampleOptimum);
  for (std::size_t i = 0; i < 3; ++i) CHECK(utility(inst, state.allocation, i) >= make_rational(1, 3));
  CHECK(!find_cycle(ConsumptionGraph(state.allocation)));
}

TEST_CASE("single agent and the one-item good/chore split") {
  const Instance single = make_instance({{2, -3}});
  const auto s = improve_to_acyclic_fpo(single, proportional_seed(single));
  CHECK(s.allocation.is_integral());
  CHECK(s.allocation(0, 0) == 1);
  CHECK(s.allocation(0, 1) == 1);

  const Instance split = make_instance({{1}, {-1}});
  const auto t = improve_to_acyclic_fpo(split, proportional_seed(split));
  CHECK(t.allocation(0, 0) == 1);
  CHECK(t.allocation(1, 0) == 0);
  CHECK(t.optimum == 1);
}

TEST_CASE("edge-forbidding loop from a cyclic optimum") {
  // Identical valuations: every allocation has welfare 2, so the seed itself
  // is optimal, and its complete graph holds the cycle (a0, o0, a1, o1).
  SUBCASE("first edge removable") {
    const Instance inst = make_instance({{1, 1}, {1, 1}});
    const auto seed = proportional_seed(inst);
    const auto state = forbid_cycle_edges(inst, seed, ImprovementState{{}, Rational(2), seed, 0});
    CHECK(state.forbidden == std::set<AgentItem>{{0, 0}});
    CHECK(state.allocation(0, 0) == 0);
    CHECK(!find_cycle(ConsumptionGraph(state.allocation)));
    CHECK(state.lp_solves == 1);
  }
  SUBCASE("first edge would cost welfare, second is taken") {
    // Agent 0 is entitled to 3/4 of everything, i.e. utility 3/2, which it
    // cannot reach without item 0.
    const Instance inst = make_instance({{1, 1}, {1, 1}}, {Rational(3), Rational(1)});
    const auto seed = proportional_seed(inst);
    const auto state = forbid_cycle_edges(inst, seed, ImprovementState{{}, Rational(2), seed, 0});
    CHECK(state.forbidden == std::set<AgentItem>{{1, 0}});
    CHECK(state.allocation(0, 0) == 1);
    CHECK(state.allocation(0, 1) == make_rational(1, 2));
    CHECK(state.allocation(1, 1) == make_rational(1, 2));
    CHECK(state.lp_solves == 2);
  }
  SUBCASE("a wrong optimum leaves no removable edge") {
    const Instance inst = make_instance({{1, 1}, {1, 1}});
    const auto seed = proportional_seed(inst);
    CHECK_THROWS_AS(forbid_cycle_edges(inst, seed, ImprovementState{{}, Rational(5), seed, 0}), InternalError);
  }
}

TEST_CASE("improvement invariants on random instances") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t m = rng() % 6;
    const long lo = trial % 4 == 0 ? -1 : -5;
    const long hi = trial % 4 == 0 ? 1 : 5;
    const Instance inst = fairmix::testing::random_instance(n, m, rng(), trial % 2 == 1, lo, hi);
    const auto seed = proportional_seed(inst);
    const auto state = improve_to_acyclic_fpo(inst, seed);
    const auto& x = state.allocation;
    const ConsumptionGraph g(x);

    for (std::size_t i = 0; i < n; ++i) {
      CHECK(utility(inst, x, i) >= utility(inst, seed, i));
      CHECK(utility(inst, x, i) >= proportional_share(inst, i));
    }
    CHECK(!find_cycle(g));
    CHECK(!find_mixed_sign_shared_item(inst, g));
    CHECK(!pareto_improvement_exists(inst, x));
    CHECK(welfare(inst, x) == state.optimum);
    for (const auto& pair : state.forbidden) CHECK(x(pair.agent, pair.item) == 0);
    CHECK(state.forbidden.size() <= n * m);
  }
}
