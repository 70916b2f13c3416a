#include "fairmix/instance.hpp"

#include <string>

#include "fairmix/error.hpp"

namespace fairmix {

Instance::Instance(std::vector<Rational> weights, Matrix<Rational> utilities)
    : weights_(std::move(weights)), utilities_(std::move(utilities)) {
  if (weights_.empty()) throw InputError("instance needs at least one agent");
  if (utilities_.rows() != weights_.size()) {
    throw InputError("utility matrix has " + std::to_string(utilities_.rows()) +
                     " rows for " + std::to_string(weights_.size()) + " agents");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (sgn(weights_[i]) <= 0) {
      throw InputError("weight of agent " + std::to_string(i) + " is not positive");
    }
    sum += weights_[i];
  }
  for (auto& w : weights_) w /= sum;

  totals_.assign(weights_.size(), Rational(0));
  for (std::size_t i = 0; i < agents(); ++i) {
    for (const auto& u : utilities_.row(i)) totals_[i] += u;
  }
}

IntegralAllocation::IntegralAllocation(std::size_t agents, std::vector<std::size_t> owner)
    : agents_(agents), owner_(std::move(owner)) {
  for (std::size_t o = 0; o < owner_.size(); ++o) {
    if (owner_[o] >= agents_) {
      throw InputError("item " + std::to_string(o) + " assigned to unknown agent " +
                       std::to_string(owner_[o]));
    }
  }
}

std::vector<std::size_t> IntegralAllocation::bundle(std::size_t agent) const {
  std::vector<std::size_t> items;
  for (std::size_t o = 0; o < owner_.size(); ++o) {
    if (owner_[o] == agent) items.push_back(o);
  }
  return items;
}

FractionalAllocation::FractionalAllocation(Matrix<Rational> fractions)
    : fractions_(std::move(fractions)) {
  for (std::size_t o = 0; o < items(); ++o) {
    Rational column = 0;
    for (std::size_t i = 0; i < agents(); ++i) {
      const Rational& f = fractions_(i, o);
      if (sgn(f) < 0 || f > 1) {
        throw InputError("fraction x[" + std::to_string(i) + "][" + std::to_string(o) +
                         "] = " + to_string(f) + " outside [0,1]");
      }
      column += f;
    }
    if (column != 1) {
      throw InputError("item " + std::to_string(o) + " is allocated " + to_string(column) +
                       " times instead of once");
    }
  }
}

FractionalAllocation::FractionalAllocation(const IntegralAllocation& integral)
    : fractions_(integral.agents(), integral.items(), Rational(0)) {
  for (std::size_t o = 0; o < integral.items(); ++o) fractions_(integral.owner(o), o) = 1;
}

bool FractionalAllocation::is_integral() const {
  for (std::size_t i = 0; i < agents(); ++i) {
    for (const auto& f : fractions_.row(i)) {
      if (sgn(f) != 0 && f != 1) return false;
    }
  }
  return true;
}

IntegralAllocation FractionalAllocation::to_integral() const {
  if (!is_integral()) throw InputError("allocation is not integral");
  std::vector<std::size_t> owner(items(), 0);
  for (std::size_t i = 0; i < agents(); ++i) {
    for (std::size_t o = 0; o < items(); ++o) {
      if (fractions_(i, o) == 1) owner[o] = i;
    }
  }
  return IntegralAllocation(agents(), std::move(owner));
}

Rational utility(const Instance& instance, const FractionalAllocation& x, std::size_t agent) {
  Rational total = 0;
  const auto u = instance.utilities().row(agent);
  const auto f = x.fractions().row(agent);
  for (std::size_t o = 0; o < u.size(); ++o) {
    if (sgn(f[o]) != 0) total += u[o] * f[o];
  }
  return total;
}

Rational utility(const Instance& instance, const IntegralAllocation& pi, std::size_t agent) {
  Rational total = 0;
  for (std::size_t o = 0; o < pi.items(); ++o) {
    if (pi.owner(o) == agent) total += instance.utility(agent, o);
  }
  return total;
}

std::vector<Rational> utilities(const Instance& instance, const FractionalAllocation& x) {
  std::vector<Rational> out;
  out.reserve(instance.agents());
  for (std::size_t i = 0; i < instance.agents(); ++i) out.push_back(utility(instance, x, i));
  return out;
}

std::vector<Rational> utilities(const Instance& instance, const IntegralAllocation& pi) {
  std::vector<Rational> out(instance.agents(), Rational(0));
  for (std::size_t o = 0; o < pi.items(); ++o) out[pi.owner(o)] += instance.utility(pi.owner(o), o);
  return out;
}

Rational proportional_share(const Instance& instance, std::size_t agent) {
  return instance.total_utility(agent) * instance.weight(agent);
}

}  // namespace fairmix

namespace fairmix {

void require_shape(const Instance& instance, const FractionalAllocation& x) {
  if (x.agents() != instance.agents() || x.items() != instance.items()) {
    throw InputError("allocation is " + std::to_string(x.agents()) + "x" +
                     std::to_string(x.items()) + " but instance is " +
                     std::to_string(instance.agents()) + "x" + std::to_string(instance.items()));
  }
}

void require_shape(const Instance& instance, const IntegralAllocation& pi) {
  if (pi.agents() != instance.agents() || pi.items() != instance.items()) {
    throw InputError("allocation covers " + std::to_string(pi.agents()) + " agents and " +
                     std::to_string(pi.items()) + " items but instance has " +
                     std::to_string(instance.agents()) + " and " +
                     std::to_string(instance.items()));
  }
}

}  // namespace fairmix
