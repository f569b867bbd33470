#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcsp/instance.hpp"
#include "pcsp/polymorphism.hpp"
#include "pcsp/rational.hpp"

namespace pcsp {

// Repetition-free expansion: each variable becomes |D|*k copies (k = max
// arity in the family), each clause expands to all selections of pairwise
// distinct copies. Preserves PSat and QUnsat.
Instance remove_repetition(const Family& fam, const Instance& inst);

struct LabelCoverEdge {
  int u = 0;
  int v = 0;
  std::vector<int> pi; // length R, values in [0, L)
};

struct LabelCover {
  int left_labels = 1;  // L
  int right_labels = 1; // R
  std::vector<LabelCoverEdge> edges;
  double eta = 0.0; // soundness parameter, metadata only

  int num_left() const;
  int num_right() const;
};

void validate_label_cover(const LabelCover& lc);

struct Labeling {
  std::vector<int> left;  // per left vertex, in [0, L)
  std::vector<int> right; // per right vertex, in [0, R)
};

// Long-code gadget: one truth table of variables per vertex, the
// weak-polymorphism clauses of every pair for every table, and the edge
// equalities realized by merging variables.
struct LongCodeGadget {
  Instance instance;                        // over the source family
  std::vector<std::vector<int>> left_var;   // [u][x] -> merged variable
  std::vector<std::vector<int>> right_var;  // [v][y] -> merged variable
};

LongCodeGadget label_cover_gadget(const LabelCover& lc, const Family& fam,
                                  int max_table_bits = 12);

// Table assignment induced by a satisfying labeling; dictators satisfy Psi_P.
Assignment dictator_assignment(const LabelCover& lc, const LongCodeGadget& g,
                               const Labeling& labeling);

struct DecodeResult {
  Labeling labeling;
  int satisfied_edges = 0;
  int total_edges = 0;
};

// Per vertex, the smallest fixing set of its table (exhaustive up to c_max),
// then the labeling over fixing-set members maximizing edge agreement.
DecodeResult decode_labeling(const LabelCover& lc, const LongCodeGadget& g,
                             const Assignment& a, int c_max);

// Clause over the base family (rel >= 0) or an equality of two variables
// (rel < 0), realized by merging.
struct GadgetClause {
  int rel = -1;
  std::vector<int> vars;
  bool is_equal() const { return rel < 0; }
};

// ppp-definition of a target relation: k target coordinates followed by
// aux_count auxiliary variables.
struct Gadget {
  int target_arity = 0;
  int aux_count = 0;
  std::vector<GadgetClause> clauses;
};

// Replaces every clause of inst (all clauses must have the gadget's target
// arity) by the gadget's clause list over fresh auxiliaries; equalities merge.
Instance apply_ppp_gadget(const Gadget& g, const Family& base, const Instance& inst);

// Both bullets of the ppp-definability contract, checked exhaustively.
bool gadget_defines(const Gadget& g, const Family& base, const PromiseRelation& target);

// The Galois-correspondence gadget realizing (S'_m, T'_m) for the target,
// with m = |target.p| and 2^m auxiliaries. Verifies that every weak
// polymorphism of fam at arity <= m is one of the target (the reduction's
// hypothesis), then verifies both ppp bullets on the output.
Gadget galois_gadget(const Family& fam, const PromiseRelation& target, int max_aux = 16);

struct FunFamily {
  std::vector<BoolFun> members;
  int arity_bound = 0; // R_max
};

struct ClosureCheckResult {
  bool projection_closed = true;
  bool clone = true;
  std::string witness; // first violation, empty when closed
};

// Projection closure up to arity_bound; clone additionally closes under
// composition with result arity <= arity_bound.
ClosureCheckResult family_closure_checks(const FunFamily& f, int r_max);

// Single promise relation of arity 2^r whose weak polymorphisms match the
// family: P = the r projection tables, Q = all arity-r members.
PromiseRelation construct_gamma_from_family(const FunFamily& f, int r);

} // namespace pcsp
