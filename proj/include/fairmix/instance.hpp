#pragma once

#include <cstddef>
#include <vector>

#include "fairmix/matrix.hpp"
#include "fairmix/rational.hpp"

namespace fairmix {

/// A fair-division instance: n agents with positive weights summing to one,
/// m items, and an n x m matrix of (possibly negative) additive utilities.
///
/// Weights are normalized on construction, so callers may pass any positive
/// entitlements (e.g. 1, 1, 2).
class Instance {
 public:
  Instance(std::vector<Rational> weights, Matrix<Rational> utilities);

  std::size_t agents() const { return weights_.size(); }
  std::size_t items() const { return utilities_.cols(); }

  const Rational& weight(std::size_t agent) const { return weights_[agent]; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& utility(std::size_t agent, std::size_t item) const {
    return utilities_(agent, item);
  }
  const Matrix<Rational>& utilities() const { return utilities_; }

  /// u_i(O), the value of the whole item set to this agent.
  const Rational& total_utility(std::size_t agent) const { return totals_[agent]; }

 private:
  std::vector<Rational> weights_;
  Matrix<Rational> utilities_;
  std::vector<Rational> totals_;
};

/// Owner per item. Each item belongs to exactly one agent.
class IntegralAllocation {
 public:
  IntegralAllocation(std::size_t agents, std::vector<std::size_t> owner);

  std::size_t agents() const { return agents_; }
  std::size_t items() const { return owner_.size(); }
  std::size_t owner(std::size_t item) const { return owner_[item]; }
  const std::vector<std::size_t>& owners() const { return owner_; }

  /// Items of one agent, ascending.
  std::vector<std::size_t> bundle(std::size_t agent) const;

  friend bool operator==(const IntegralAllocation&, const IntegralAllocation&) = default;

 private:
  std::size_t agents_;
  std::vector<std::size_t> owner_;
};

/// x_{i,o} in [0,1] with every column summing to exactly one.
class FractionalAllocation {
 public:
  /// Throws InputError when an entry leaves [0,1] or a column sum differs from 1.
  explicit FractionalAllocation(Matrix<Rational> fractions);
  explicit FractionalAllocation(const IntegralAllocation& integral);

  std::size_t agents() const { return fractions_.rows(); }
  std::size_t items() const { return fractions_.cols(); }
  const Rational& operator()(std::size_t agent, std::size_t item) const {
    return fractions_(agent, item);
  }
  const Matrix<Rational>& fractions() const { return fractions_; }

  bool is_integral() const;
  /// Throws InputError unless is_integral().
  IntegralAllocation to_integral() const;

  friend bool operator==(const FractionalAllocation&, const FractionalAllocation&) = default;

 private:
  Matrix<Rational> fractions_;
};

Rational utility(const Instance& instance, const FractionalAllocation& x, std::size_t agent);
Rational utility(const Instance& instance, const IntegralAllocation& pi, std::size_t agent);

/// Utility of every agent, in agent order.
std::vector<Rational> utilities(const Instance& instance, const FractionalAllocation& x);
std::vector<Rational> utilities(const Instance& instance, const IntegralAllocation& pi);

/// Weighted proportional share u_i(O) * b_i.
Rational proportional_share(const Instance& instance, std::size_t agent);

}  // namespace fairmix

namespace fairmix {

/// Throws InputError when the allocation's dimensions do not match the instance.
void require_shape(const Instance& instance, const FractionalAllocation& x);
void require_shape(const Instance& instance, const IntegralAllocation& pi);

}  // namespace fairmix
