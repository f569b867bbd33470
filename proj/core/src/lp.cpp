#include "pcsp/lp.hpp"

#include "pcsp/errors.hpp"

namespace pcsp {

void LPProblem::add(std::vector<Rational> row, Cmp cmp, Rational bound) {
  require(static_cast<int>(row.size()) == num_vars, Errc::LengthMismatch,
          "constraint row length does not match the variable count");
  constraints.push_back({std::move(row), cmp, std::move(bound)});
}

void LPProblem::pin(int var, Rational value) {
  require(var >= 0 && var < num_vars, Errc::LengthMismatch, "pin on unknown variable");
  pins[var] = std::move(value);
}

bool lp_point_satisfies(const LPProblem& p, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != p.num_vars) return false;
  for (int j = 0; j < p.num_vars; ++j)
    if (p.pins[j] && x[j] != *p.pins[j]) return false;
  for (const auto& c : p.constraints) {
    Rational lhs = 0;
    for (int j = 0; j < p.num_vars; ++j) lhs += c.row[j] * x[j];
    switch (c.cmp) {
      case Cmp::Le:
        if (lhs > c.bound) return false;
        break;
      case Cmp::Eq:
        if (lhs != c.bound) return false;
        break;
      case Cmp::Ge:
        if (lhs < c.bound) return false;
        break;
    }
  }
  return true;
}

// Phase-one simplex over exact rationals. Free variables are split into
// positive and negative parts, inequalities get slacks, every row gets an
// artificial and the artificial sum is driven to zero. Bland's rule on both
// the entering and the leaving choice guarantees termination.
LPResult lp_feasible(const LPProblem& p) {
  // Map out pinned columns.
  std::vector<int> free_of; // free index -> original var
  std::vector<int> idx_of(p.num_vars, -1);
  for (int j = 0; j < p.num_vars; ++j) {
    if (!p.pins[j]) {
      idx_of[j] = static_cast<int>(free_of.size());
      free_of.push_back(j);
    }
  }
  const int nf = static_cast<int>(free_of.size());
  const int m = static_cast<int>(p.constraints.size());

  // Structural columns: u_j, w_j per free variable, then one slack per
  // inequality row.
  int slacks = 0;
  for (const auto& c : p.constraints)
    if (c.cmp != Cmp::Eq) ++slacks;
  const int n_struct = 2 * nf + slacks;
  const int n_total = n_struct + m; // artificials last

  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(n_total + 1));
  int slack_at = 2 * nf;
  for (int i = 0; i < m; ++i) {
    const auto& c = p.constraints[i];
    Rational rhs = c.bound;
    for (int j = 0; j < p.num_vars; ++j) {
      if (p.pins[j])
        rhs -= c.row[j] * *p.pins[j];
      else {
        t[i][2 * idx_of[j]] = c.row[j];
        t[i][2 * idx_of[j] + 1] = -c.row[j];
      }
    }
    if (c.cmp == Cmp::Le)
      t[i][slack_at++] = 1;
    else if (c.cmp == Cmp::Ge)
      t[i][slack_at++] = -1;
    t[i][n_total] = rhs;
    if (rhs < 0)
      for (auto& v : t[i]) v = -v;
    t[i][n_struct + i] = 1;
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n_struct + i;

  // Reduced costs for min sum(artificials): cbar_j = -sum_i t[i][j] on
  // structural columns.
  std::vector<Rational> cbar(n_struct);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n_struct; ++j) cbar[j] -= t[i][j];

  while (true) {
    int enter = -1;
    for (int j = 0; j < n_struct; ++j)
      if (cbar[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][n_total] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    require(leave >= 0, Errc::Internal, "phase-one column unbounded");

    // Pivot at (leave, enter).
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (int j = 0; j <= n_total; ++j) t[i][j] -= f * t[leave][j];
    }
    const Rational cf = cbar[enter];
    for (int j = 0; j < n_struct; ++j) cbar[j] -= cf * t[leave][j];
    basis[leave] = enter;
  }

  Rational obj = 0; // residual artificial mass
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n_struct) obj += t[i][n_total];

  LPResult out;
  if (obj != 0) return out; // some artificial is stuck positive
  out.feasible = true;
  std::vector<Rational> split(2 * nf);
  for (int i = 0; i < m; ++i)
    if (basis[i] < 2 * nf) split[basis[i]] = t[i][n_total];
  out.point.resize(p.num_vars);
  for (int j = 0; j < p.num_vars; ++j)
    out.point[j] = p.pins[j] ? *p.pins[j] : split[2 * idx_of[j]] - split[2 * idx_of[j] + 1];
  require(lp_point_satisfies(p, out.point), Errc::Internal, "simplex point fails verification");
  return out;
}

} // namespace pcsp
