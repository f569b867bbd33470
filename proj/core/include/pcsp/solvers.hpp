#pragma once

#include <optional>
#include <string>
#include <utility>

#include "pcsp/classify.hpp"
#include "pcsp/instance.hpp"
#include "pcsp/oracle.hpp"

namespace pcsp {

enum class Answer { Yes, No };

struct Verdict {
  Answer answer = Answer::No;
  std::optional<Assignment> witness; // satisfies Psi_Q when present
  std::string engine;

  bool yes() const { return answer == Answer::Yes; }
};

// Dispatches on the first family kind that holds, same probe order as
// classify; anti kinds run their base solver on the negated family.
Verdict solve(const Family& fam, const Instance& inst);
Verdict solve_with(const Family& fam, const Instance& inst, FamilyKind kind);

// Constant assignment check (bit = 0 or 1); clauses over an empty-P relation
// are rejected up front.
Verdict solve_constant(const Family& fam, const Instance& inst, int bit);

enum class MeetJoin { Meet, Join };

// Closes each P to its meet (join) closure, compiles the closures to Horn
// (dual Horn) clauses and decides by unit propagation; exact for the
// sandwiched CSP, hence sound for the promise problem.
Verdict solve_min_closed(const Family& fam, const Instance& inst, MeetJoin mode);

// Per clause the F2 affine hull equations of P instantiated on the clause
// variables; Gaussian elimination over F2 decides.
Verdict solve_affine(const Family& fam, const Instance& inst);

// The hull LP: per clause, clause variables lie in the convex hull of the
// members of P. Each variable is pinned to 0 then 1 independently; both pins
// infeasible means unsatisfiable. kind only labels the engine (Maj or At).
Verdict solve_lp_decision(const Family& fam, const Instance& inst, FamilyKind kind);

// Integer affine hull per clause, solved over Z; solutions round to a
// Q-side witness (v >= 1 -> 1, v <= 0 -> 0).
Verdict solve_at_affine(const Family& fam, const Instance& inst);

// Satisfying assignment for Psi_Q built from the pinned LP solutions, by the
// convex-weight perturbation scheme (Maj) or the reference-solution sign
// rule (At). The result is verified against Psi_Q; nullopt only if that
// verification fails.
std::optional<Assignment> construct_solution(const Family& fam, const Instance& inst,
                                             FamilyKind kind);

// Family with every (P, Q) replaced by (P, flip_all(Q)); the instance is
// shared. Verdicts transfer verbatim, witnesses transfer negated.
std::pair<Family, Instance> negate_q_transform(const Family& fam, const Instance& inst);

} // namespace pcsp
