#include "fairmix/lp.hpp"

#include <algorithm>
#include <string>

#include "fairmix/error.hpp"

namespace fairmix::lp {

void Problem::validate() const {
  if (objective.size() != variables) {
    throw InputError("objective has " + std::to_string(objective.size()) + " coefficients for " +
                     std::to_string(variables) + " variables");
  }
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    if (constraints[r].coefficients.size() != variables) {
      throw InputError("constraint " + std::to_string(r) + " has " +
                       std::to_string(constraints[r].coefficients.size()) +
                       " coefficients for " + std::to_string(variables) + " variables");
    }
  }
}

bool is_feasible(const Problem& problem, const std::vector<Rational>& x) {
  if (x.size() != problem.variables) return false;
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  for (const auto& c : problem.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (sgn(c.coefficients[j]) != 0 && sgn(x[j]) != 0) lhs += c.coefficients[j] * x[j];
    }
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

const char* to_string(Status status) {
  switch (status) {
    case Status::optimal:
      return "optimal";
    case Status::infeasible:
      return "infeasible";
    case Status::unbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

using Row = std::vector<Rational>;

// Dense simplex tableau. Columns are laid out as structural variables, then
// slack/surplus columns, then artificials; the last entry of each row is the
// right-hand side. The objective row holds reduced costs d_j and -z.
class Tableau {
 public:
  explicit Tableau(const Problem& problem) : structural_(problem.variables) {
    // Row normalization: rhs >= 0 everywhere, and ">= 0" rows become "<= 0"
    // so that they start with a feasible slack instead of an artificial.
    struct Normalized {
      const Constraint* source;
      bool negate;
      Relation relation;
    };
    std::vector<Normalized> rows;
    rows.reserve(problem.constraints.size());
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (const auto& c : problem.constraints) {
      Normalized n{&c, false, c.relation};
      if (sgn(c.rhs) < 0 || (sgn(c.rhs) == 0 && c.relation == Relation::greater_equal)) {
        n.negate = true;
        if (c.relation == Relation::less_equal) n.relation = Relation::greater_equal;
        if (c.relation == Relation::greater_equal) n.relation = Relation::less_equal;
      }
      if (n.relation != Relation::equal) ++slacks;
      if (n.relation != Relation::less_equal) ++artificials;
      rows.push_back(n);
    }

    artificial_begin_ = structural_ + slacks;
    width_ = artificial_begin_ + artificials;
    std::size_t next_slack = structural_;
    std::size_t next_artificial = artificial_begin_;
    for (const auto& n : rows) {
      Row row(width_ + 1, Rational(0));
      for (std::size_t j = 0; j < structural_; ++j) {
        if (sgn(n.source->coefficients[j]) != 0) {
          row[j] = n.negate ? Rational(-n.source->coefficients[j]) : n.source->coefficients[j];
        }
      }
      row[width_] = n.negate ? Rational(-n.source->rhs) : n.source->rhs;
      switch (n.relation) {
        case Relation::less_equal:
          row[next_slack] = 1;
          basis_.push_back(next_slack++);
          break;
        case Relation::greater_equal:
          row[next_slack++] = -1;
          row[next_artificial] = 1;
          basis_.push_back(next_artificial++);
          break;
        case Relation::equal:
          row[next_artificial] = 1;
          basis_.push_back(next_artificial++);
          break;
      }
      rows_.push_back(std::move(row));
    }
    objective_.assign(width_ + 1, Rational(0));
  }

  bool has_artificials() const { return artificial_begin_ < width_; }

  // Phase 1: maximize -(sum of artificials). Returns false when infeasible.
  bool phase_one() {
    std::fill(objective_.begin(), objective_.end(), Rational(0));
    for (std::size_t j = artificial_begin_; j < width_; ++j) objective_[j] = -1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!is_artificial(basis_[r])) continue;
      for (std::size_t j = 0; j <= width_; ++j) {
        if (sgn(rows_[r][j]) != 0) objective_[j] += rows_[r][j];
      }
    }
    if (!iterate(width_)) throw InternalError("phase-one simplex reported unbounded");
    if (sgn(objective_[width_]) > 0) return false;

    // Pivot zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < rows_.size();) {
      if (!is_artificial(basis_[r])) {
        ++r;
        continue;
      }
      std::size_t entering = artificial_begin_;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (sgn(rows_[r][j]) != 0) {
          entering = j;
          break;
        }
      }
      if (entering == artificial_begin_) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        continue;
      }
      pivot(r, entering, width_);
      ++r;
    }
    // Artificial columns are never touched again.
    for (auto& row : rows_) {
      row[artificial_begin_] = row[width_];
      row.resize(artificial_begin_ + 1);
    }
    width_ = artificial_begin_;
    objective_.resize(width_ + 1);
    return true;
  }

  // Phase 2 with the real objective. Returns false when unbounded.
  bool phase_two(const std::vector<Rational>& costs) {
    std::fill(objective_.begin(), objective_.end(), Rational(0));
    for (std::size_t j = 0; j < structural_; ++j) objective_[j] = costs[j];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] >= structural_) continue;
      const Rational& cb = costs[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j) {
        if (sgn(rows_[r][j]) != 0) objective_[j] -= cb * rows_[r][j];
      }
    }
    return iterate(width_);
  }

  std::vector<Rational> assignment() const {
    std::vector<Rational> x(structural_, Rational(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < structural_) x[basis_[r]] = rows_[r][width_];
    }
    return x;
  }

  std::vector<std::size_t> structural_basis() const {
    std::vector<std::size_t> out;
    for (std::size_t b : basis_) {
      if (b < structural_) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool is_artificial(std::size_t column) const { return column >= artificial_begin_; }

  // Bland's rule: lowest-index improving column enters; among tied ratios the
  // lowest-index basic variable leaves. Returns false on unboundedness.
  bool iterate(std::size_t eligible) {
    for (;;) {
      std::size_t entering = eligible;
      for (std::size_t j = 0; j < eligible; ++j) {
        if (sgn(objective_[j]) > 0) {
          entering = j;
          break;
        }
      }
      if (entering == eligible) return true;

      std::size_t leaving = rows_.size();
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& a = rows_[r][entering];
        if (sgn(a) <= 0) continue;
        Rational ratio = rows_[r][width_] / a;
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows_.size()) return false;
      pivot(leaving, entering, width_);
    }
  }

  void pivot(std::size_t r, std::size_t c, std::size_t width) {
    Row& prow = rows_[r];
    const Rational inverse = 1 / prow[c];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j <= width; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inverse;
        support.push_back(j);
      }
    }
    Rational factor;
    Rational product;
    auto eliminate = [&](Row& row) {
      if (sgn(row[c]) == 0) return;
      factor = row[c];
      for (std::size_t j : support) {
        mpq_mul(product.get_mpq_t(), factor.get_mpq_t(), prow[j].get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), product.get_mpq_t());
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(objective_);
    basis_[r] = c;
  }

  std::size_t structural_;
  std::size_t artificial_begin_ = 0;
  std::size_t width_ = 0;
  std::vector<Row> rows_;
  Row objective_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Solution solve(const Problem& problem) {
  problem.validate();
  Tableau tableau(problem);
  Solution solution;
  if (tableau.has_artificials() && !tableau.phase_one()) {
    solution.status = Status::infeasible;
    return solution;
  }
  if (!tableau.phase_two(problem.objective)) {
    solution.status = Status::unbounded;
    return solution;
  }
  solution.status = Status::optimal;
  solution.assignment = tableau.assignment();
  solution.basis = tableau.structural_basis();
  solution.value = 0;
  for (std::size_t j = 0; j < problem.variables; ++j) {
    if (sgn(solution.assignment[j]) != 0) solution.value += problem.objective[j] * solution.assignment[j];
  }
  if (!is_feasible(problem, solution.assignment)) {
    throw InternalError("simplex returned a point that violates the constraints");
  }
  return solution;
}

}  // namespace fairmix::lp
