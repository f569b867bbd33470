#include "pcsp/solvers.hpp"

#include <algorithm>
#include <bit>

#include "pcsp/affine.hpp"
#include "pcsp/gf2.hpp"
#include "pcsp/lp.hpp"

namespace pcsp {

namespace {

constexpr FamilyKind kSolveOrder[] = {
    FamilyKind::Zero,    FamilyKind::One,     FamilyKind::And,    FamilyKind::Or,
    FamilyKind::AntiAnd, FamilyKind::AntiOr,  FamilyKind::Par,    FamilyKind::Maj,
    FamilyKind::At,      FamilyKind::AntiPar, FamilyKind::AntiMaj, FamilyKind::AntiAt,
};

bool kind_needs_symmetry(FamilyKind k) {
  const FamilyKind base = kind_base(k);
  return base == FamilyKind::Maj || base == FamilyKind::At;
}

std::optional<Assignment> verify_witness(const Family& fam, const Instance& inst,
                                         Assignment w) {
  if (evaluate(fam, inst, w, Side::Q)) return w;
  return std::nullopt;
}

} // namespace

Verdict solve(const Family& fam, const Instance& inst) {
  for (FamilyKind kind : kSolveOrder) {
    if (kind_needs_symmetry(kind) && !fam.all_symmetric()) continue;
    if (has_family(fam, kind)) return solve_with(fam, inst, kind);
  }
  fail(Errc::NotTractable, "no named weak polymorphism family holds");
}

Verdict solve_with(const Family& fam, const Instance& inst, FamilyKind kind) {
  validate_instance(fam, inst);
  if (kind_is_anti(kind)) {
    auto [nfam, ninst] = negate_q_transform(fam, inst);
    Verdict v = solve_with(nfam, ninst, kind_base(kind));
    if (v.witness) v.witness = verify_witness(fam, inst, v.witness->negated());
    v.engine = "negate+" + v.engine;
    return v;
  }
  switch (kind) {
    case FamilyKind::Zero: return solve_constant(fam, inst, 0);
    case FamilyKind::One: return solve_constant(fam, inst, 1);
    case FamilyKind::And: return solve_min_closed(fam, inst, MeetJoin::Meet);
    case FamilyKind::Or: return solve_min_closed(fam, inst, MeetJoin::Join);
    case FamilyKind::Par: return solve_affine(fam, inst);
    case FamilyKind::Maj:
    case FamilyKind::At: return solve_lp_decision(fam, inst, kind);
    default: break;
  }
  fail(Errc::NotTractable, "no solver for this kind");
}

Verdict solve_constant(const Family& fam, const Instance& inst, int bit) {
  validate_instance(fam, inst);
  Verdict v;
  v.engine = bit ? "constant-one" : "constant-zero";
  for (const Clause& c : inst.clauses)
    if (fam.pair(c.rel).p.empty()) return v; // P-clause can never be satisfied
  Assignment a;
  a.bits.assign(inst.num_vars, static_cast<std::uint8_t>(bit));
  if (evaluate(fam, inst, a, Side::Q)) {
    v.answer = Answer::Yes;
    v.witness = a;
  }
  return v;
}

namespace {

// Horn clause over relation-local coordinates: body of negative literals
// plus an optional positive head.
struct HornClause {
  std::uint32_t body = 0; // coordinate mask
  int head = -1;
};

// All Horn clauses satisfied by every member; for a meet-closed relation the
// conjunction's solution set is exactly the relation.
std::vector<HornClause> horn_compile(const Relation& r) {
  const int k = r.arity();
  const auto members = r.members();
  std::vector<HornClause> kept;
  for (std::uint32_t body = 0; body < (std::uint32_t{1} << k); ++body) {
    for (int head = -1; head < k; ++head) {
      if (head >= 0 && ((body >> head) & 1)) continue; // trivial clause
      bool ok = true;
      for (auto x : members) {
        const bool violated = (body & ~x) == 0 && (head < 0 || !((x >> head) & 1));
        if (violated) {
          ok = false;
          break;
        }
      }
      if (ok) kept.push_back({body, head});
    }
  }
  // Solution-set equality guard (holds for meet-closed relations).
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << k); ++x) {
    bool sat = true;
    for (const auto& c : kept)
      if ((c.body & ~x) == 0 && (c.head < 0 || !((x >> c.head) & 1))) {
        sat = false;
        break;
      }
    require(sat == r.contains(x), Errc::Internal, "Horn compilation drifted from the closure");
  }
  return kept;
}

struct HornInstance {
  int num_vars = 0;
  // Instantiated clauses: sorted unique body variables, head variable or -1.
  std::vector<std::pair<std::vector<int>, int>> clauses;
};

// Unit propagation; returns the minimal model or nullopt.
std::optional<std::vector<std::uint8_t>> horn_sat(const HornInstance& h) {
  struct Rule {
    int pending;
    int head;
  };
  std::vector<Rule> rules;
  std::vector<std::vector<int>> watch(h.num_vars);
  std::vector<std::uint8_t> value(h.num_vars, 0);
  std::vector<int> queue;

  for (const auto& [body, head] : h.clauses) {
    const int id = static_cast<int>(rules.size());
    rules.push_back({static_cast<int>(body.size()), head});
    for (int v : body) watch[v].push_back(id);
    if (body.empty()) {
      if (head < 0) return std::nullopt;
      if (!value[head]) {
        value[head] = 1;
        queue.push_back(head);
      }
    }
  }
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    for (int id : watch[v]) {
      if (--rules[id].pending != 0) continue;
      if (rules[id].head < 0) return std::nullopt;
      if (!value[rules[id].head]) {
        value[rules[id].head] = 1;
        queue.push_back(rules[id].head);
      }
    }
  }
  // A body may contain a variable twice; pending counts hit zero only after
  // each occurrence fires, so recheck goal clauses directly.
  for (const auto& [body, head] : h.clauses) {
    bool body_true = true;
    for (int v : body) body_true = body_true && value[v];
    if (body_true && head >= 0 && !value[head])
      fail(Errc::Internal, "propagation missed a forced head");
    if (body_true && head < 0) return std::nullopt;
  }
  return value;
}

} // namespace

Verdict solve_min_closed(const Family& fam, const Instance& inst, MeetJoin mode) {
  validate_instance(fam, inst);
  const bool meet = mode == MeetJoin::Meet;
  Verdict v;
  v.engine = meet ? "horn-meet" : "horn-join";

  // Per relation: Horn clauses of the closure (join mode works on the
  // complemented coordinates and negates the model at the end).
  std::vector<std::vector<HornClause>> compiled(fam.size());
  std::vector<bool> used(fam.size(), false);
  for (const Clause& c : inst.clauses) used[c.rel] = true;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (!used[i]) continue;
    Relation closed = meet ? closure_meet(fam.pair(i).p) : flip_all(closure_join(fam.pair(i).p));
    compiled[i] = horn_compile(closed);
  }

  HornInstance h;
  h.num_vars = inst.num_vars;
  for (const Clause& c : inst.clauses) {
    for (const HornClause& hc : compiled[c.rel]) {
      std::vector<int> body;
      for (int i = 0; i < static_cast<int>(c.vars.size()); ++i)
        if ((hc.body >> i) & 1) body.push_back(c.vars[i]);
      int head = hc.head >= 0 ? c.vars[hc.head] : -1;
      // With repetition a variable can occur both positively and negatively.
      if (head >= 0 && std::find(body.begin(), body.end(), head) != body.end()) continue;
      std::sort(body.begin(), body.end());
      body.erase(std::unique(body.begin(), body.end()), body.end());
      h.clauses.push_back({std::move(body), head});
    }
  }

  auto model = horn_sat(h);
  if (!model) return v;
  Assignment a(std::move(*model));
  if (!meet) a = a.negated();
  v.answer = Answer::Yes;
  v.witness = verify_witness(fam, inst, std::move(a));
  return v;
}

Verdict solve_affine(const Family& fam, const Instance& inst) {
  validate_instance(fam, inst);
  Verdict v;
  v.engine = "affine-f2";

  // Per relation: F2 equations cutting out the parity closure of P.
  std::vector<std::vector<std::pair<std::uint32_t, int>>> eqs(fam.size()); // (coef mask, rhs)
  std::vector<bool> used(fam.size(), false);
  for (const Clause& c : inst.clauses) used[c.rel] = true;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (!used[i]) continue;
    const Relation& p = fam.pair(i).p;
    if (p.empty()) continue;
    const F2AffineHull h = affine_hull_f2(p);
    // Kernel of the difference span: greedily collect independent vectors a
    // with a . b = 0 for all basis b.
    const int k = p.arity();
    std::vector<std::uint32_t> kernel;
    std::vector<std::uint32_t> reduced; // row-reduced copies for independence
    for (std::uint32_t cand = 1; cand < (std::uint32_t{1} << k); ++cand) {
      bool orth = true;
      for (auto b : h.basis)
        if (std::popcount(cand & b) & 1) {
          orth = false;
          break;
        }
      if (!orth) continue;
      std::uint32_t d = cand;
      for (auto rrow : reduced) d = std::min(d, d ^ rrow);
      if (!d) continue;
      reduced.push_back(d);
      const int rhs = std::popcount(cand & h.offset) & 1;
      eqs[i].push_back({cand, rhs});
      kernel.push_back(cand);
      if (kernel.size() == static_cast<std::size_t>(k) - h.basis.size()) break;
    }
  }

  F2System sys(inst.num_vars);
  for (const Clause& c : inst.clauses) {
    if (fam.pair(c.rel).p.empty()) return v; // NO: a P-clause can never hold
    for (const auto& [mask, rhs] : eqs[c.rel]) {
      std::vector<int> support;
      for (int i = 0; i < static_cast<int>(c.vars.size()); ++i)
        if ((mask >> i) & 1) support.push_back(c.vars[i]);
      sys.add(std::move(support), rhs);
    }
  }
  auto sol = gauss_f2(sys);
  if (!sol) return v;
  v.answer = Answer::Yes;
  v.witness = verify_witness(fam, inst, Assignment(std::move(*sol)));
  return v;
}

namespace {

// The hull LP: variables are the instance variables followed by one convex
// weight per (clause, member of P). Box rows keep everything bounded.
LPProblem build_hull_lp(const Family& fam, const Instance& inst,
                        std::vector<std::vector<std::uint32_t>>& member_cache) {
  int total = inst.num_vars;
  std::vector<int> alpha_base(inst.clauses.size());
  for (std::size_t ci = 0; ci < inst.clauses.size(); ++ci) {
    alpha_base[ci] = total;
    total += static_cast<int>(member_cache[inst.clauses[ci].rel].size());
  }

  LPProblem lp(total);
  auto unit_row = [&](int var, Rational coef) {
    std::vector<Rational> row(total);
    row[var] = std::move(coef);
    return row;
  };
  for (int j = 0; j < inst.num_vars; ++j) {
    lp.add(unit_row(j, 1), Cmp::Ge, 0);
    lp.add(unit_row(j, 1), Cmp::Le, 1);
  }
  for (std::size_t ci = 0; ci < inst.clauses.size(); ++ci) {
    const Clause& c = inst.clauses[ci];
    const auto& members = member_cache[c.rel];
    const int base = alpha_base[ci];
    const int s = static_cast<int>(members.size());
    for (int t = 0; t < s; ++t) lp.add(unit_row(base + t, 1), Cmp::Ge, 0);
    std::vector<Rational> sum_row(total);
    for (int t = 0; t < s; ++t) sum_row[base + t] = 1;
    lp.add(std::move(sum_row), Cmp::Eq, 1); // infeasible on empty P, as it must be
    for (int i = 0; i < static_cast<int>(c.vars.size()); ++i) {
      std::vector<Rational> row(total);
      for (int t = 0; t < s; ++t)
        if ((members[t] >> i) & 1) row[base + t] += 1;
      row[c.vars[i]] -= 1;
      lp.add(std::move(row), Cmp::Eq, 0);
    }
  }
  return lp;
}

} // namespace

Verdict solve_lp_decision(const Family& fam, const Instance& inst, FamilyKind kind) {
  validate_instance(fam, inst);
  Verdict v;
  v.engine = kind == FamilyKind::At ? "lp-at" : "lp-maj";

  std::vector<std::vector<std::uint32_t>> member_cache(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) member_cache[i] = fam.pair(i).p.members();
  LPProblem lp = build_hull_lp(fam, inst, member_cache);

  if (!lp_feasible(lp).feasible) return v;
  for (int j = 0; j < inst.num_vars; ++j) {
    LPProblem pinned = lp;
    pinned.pin(j, 0);
    if (lp_feasible(pinned).feasible) continue;
    pinned.pins[j] = Rational(1);
    if (lp_feasible(pinned).feasible) continue;
    return v;
  }
  v.answer = Answer::Yes;
  return v;
}

Verdict solve_at_affine(const Family& fam, const Instance& inst) {
  validate_instance(fam, inst);
  Verdict v;
  v.engine = "affine-z";

  std::vector<std::vector<IntAffineEquation>> hulls(fam.size());
  std::vector<bool> used(fam.size(), false);
  for (const Clause& c : inst.clauses) used[c.rel] = true;
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (used[i] && !fam.pair(i).p.empty()) hulls[i] = affine_hull_z(fam.pair(i).p);

  std::vector<std::vector<Integer>> a;
  std::vector<Integer> b;
  for (const Clause& c : inst.clauses) {
    if (fam.pair(c.rel).p.empty()) return v;
    for (const auto& eq : hulls[c.rel]) {
      std::vector<Integer> row(inst.num_vars, 0);
      for (int i = 0; i < static_cast<int>(c.vars.size()); ++i) row[c.vars[i]] += eq.coeffs[i];
      a.push_back(std::move(row));
      b.push_back(eq.rhs);
    }
  }
  auto sol = solve_integer_linear(std::move(a), std::move(b));
  if (!sol) return v;
  v.answer = Answer::Yes;
  Assignment w;
  w.bits.resize(inst.num_vars);
  for (int j = 0; j < inst.num_vars; ++j) w.bits[j] = (*sol)[j] >= 1 ? 1 : 0;
  v.witness = verify_witness(fam, inst, std::move(w));
  return v;
}

std::optional<Assignment> construct_solution(const Family& fam, const Instance& inst,
                                             FamilyKind kind) {
  require(kind == FamilyKind::Maj || kind == FamilyKind::At, Errc::NotTractable,
          "solution construction follows the maj/at LP");
  validate_instance(fam, inst);
  const int n = inst.num_vars;

  std::vector<std::vector<std::uint32_t>> member_cache(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) member_cache[i] = fam.pair(i).p.members();
  LPProblem lp = build_hull_lp(fam, inst, member_cache);

  const LPResult base = lp_feasible(lp);
  require(base.feasible, Errc::NotYes, "decision LP is infeasible");

  // Column j: a feasible point with v_j pinned to 0 or 1 (0 tried first).
  std::vector<std::vector<Rational>> m_cols(n);
  for (int j = 0; j < n; ++j) {
    LPProblem pinned = lp;
    pinned.pin(j, 0);
    LPResult res = lp_feasible(pinned);
    if (!res.feasible) {
      pinned.pins[j] = Rational(1);
      res = lp_feasible(pinned);
    }
    require(res.feasible, Errc::NotYes, "both pins infeasible: the decision is NO");
    m_cols[j].assign(res.point.begin(), res.point.begin() + n);
  }

  auto apply_m = [&](const std::vector<Rational>& w) {
    std::vector<Rational> out(n, Rational(0));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) out[i] += m_cols[j][i] * w[j];
    return out;
  };

  Assignment result;
  result.bits.resize(n);
  if (n == 0) {
    return verify_witness(fam, inst, std::move(result));
  }

  std::vector<Rational> w(n, Rational(1, n)); // convex weights
  std::vector<Rational> mw = apply_m(w);

  if (kind == FamilyKind::Maj) {
    const Rational half(1, 2);
    while (true) {
      int bad = -1;
      for (int i = 0; i < n; ++i)
        if (mw[i] == half) {
          bad = i;
          break;
        }
      if (bad < 0) break;
      Rational eps(1, 2);
      bool first = true;
      for (int i = 0; i < n; ++i) {
        if (mw[i] == half) continue;
        Rational gap = abs(mw[i] - half);
        if (first || gap < eps) {
          eps = gap;
          first = false;
        }
      }
      eps /= n;
      // w <- (1 - eps/2) w + (eps/2) e_bad
      const Rational keep = 1 - eps / 2;
      for (int j = 0; j < n; ++j) w[j] *= keep;
      w[bad] += eps / 2;
      mw = apply_m(w);
    }
    for (int i = 0; i < n; ++i) result.bits[i] = mw[i] > half ? 1 : 0;
    return verify_witness(fam, inst, std::move(result));
  }

  // AT: move off the reference solution on every fractional coordinate.
  const std::vector<Rational> ref(base.point.begin(), base.point.begin() + n);
  auto fractional = [&](int i) { return ref[i] != 0 && ref[i] != 1; };
  while (true) {
    int bad = -1;
    for (int i = 0; i < n; ++i)
      if (fractional(i) && mw[i] == ref[i]) {
        bad = i;
        break;
      }
    if (bad < 0) break;
    Rational eps(1, 2);
    bool first = true;
    for (int i = 0; i < n; ++i) {
      if (!fractional(i) || mw[i] == ref[i]) continue;
      Rational gap = abs(mw[i] - ref[i]);
      if (first || gap < eps) {
        eps = gap;
        first = false;
      }
    }
    eps /= n;
    const Rational keep = 1 - eps / 2;
    for (int j = 0; j < n; ++j) w[j] *= keep;
    w[bad] += eps / 2;
    mw = apply_m(w);
  }
  for (int i = 0; i < n; ++i) {
    if (mw[i] > ref[i])
      result.bits[i] = 1;
    else if (mw[i] < ref[i])
      result.bits[i] = 0;
    else
      result.bits[i] = ref[i] == 1 ? 1 : 0;
  }
  return verify_witness(fam, inst, std::move(result));
}

std::pair<Family, Instance> negate_q_transform(const Family& fam, const Instance& inst) {
  std::vector<PromiseRelation> pairs;
  std::vector<std::string> names;
  pairs.reserve(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    Relation nq = flip_all(fam.pair(i).q);
    require(fam.pair(i).p.is_subset_of(nq), Errc::NotPromise,
            "P of '" + fam.name(i) + "' is not inside the negated Q");
    pairs.emplace_back(fam.pair(i).p, std::move(nq));
    names.push_back(fam.name(i));
  }
  return {make_family(std::move(pairs), std::move(names)), inst};
}

} // namespace pcsp
