#pragma once

#include <optional>
#include <vector>

#include "pcsp/rational.hpp"

namespace pcsp {

enum class Cmp { Le, Eq, Ge };

struct LinearConstraint {
  std::vector<Rational> row; // length = num_vars
  Cmp cmp = Cmp::Eq;
  Rational bound;
};

struct LPProblem {
  int num_vars = 0;
  std::vector<LinearConstraint> constraints;
  // Pinned variables; pinned columns are substituted out before the solve.
  std::vector<std::optional<Rational>> pins;

  explicit LPProblem(int n = 0) : num_vars(n), pins(n) {}

  void add(std::vector<Rational> row, Cmp cmp, Rational bound);
  void pin(int var, Rational value);
};

struct LPResult {
  bool feasible = false;
  std::vector<Rational> point; // length num_vars when feasible (pins included)
};

// Exact phase-one simplex with Bland's rule; feasibility only, variables are
// free unless constrained. Deterministic for fixed input.
LPResult lp_feasible(const LPProblem& p);

// Substitutes the point into every constraint; used as a self-check.
bool lp_point_satisfies(const LPProblem& p, const std::vector<Rational>& x);

} // namespace pcsp
