#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcsp/polymorphism.hpp"

namespace pcsp {

struct Classification {
  enum class Tag { Tractable, NPHard, OutOfScope };

  Tag tag = Tag::OutOfScope;
  std::optional<FamilyKind> kind; // set when tractable
  std::string reason;             // set when out of scope
  std::vector<std::string> trace; // probe log

  bool tractable() const { return tag == Tag::Tractable; }
  bool np_hard() const { return tag == Tag::NPHard; }
};

// Dichotomy decision for folded symmetric families. Probe order: Zero, One,
// And, Or, AntiAnd, AntiOr, then Par, Maj, At, AntiPar, AntiMaj, AntiAt.
// assume_folded lets a caller vouch for foldedness when NOT is absent.
Classification classify(const Family& fam, bool assume_folded = false);

// Explicit characterization for a single symmetric pair plus NOT and the two
// constant-setting relations. Conditions checked in the order
// parity (a), majority window (b), singleton (c).
Classification classify_explicit(int k, WeightSet s, WeightSet t);

// (Ham_{k-1}(S \ {k}), Ham_{k-1}(T \ {k})): idempotent weak polymorphisms carry over.
PromiseRelation shrink_top(const PromiseRelation& pr);

// Arity k-1 with every weight decremented, weight -1 discarded: folded
// idempotent weak polymorphisms carry over.
PromiseRelation shift_down(const PromiseRelation& pr);

struct CanonicalRelaxation {
  PromiseRelation rel;
  std::vector<std::string> trace; // one entry per relax/shrink/shift/flip step
};

// Canonical relaxation excluding the given kind (At or Maj), following the
// constructive case analysis: locate a violating weight, relax P to a
// singleton or pair, then shrink/shift/flip into one of the two shapes.
CanonicalRelaxation canonical_excluding(const Family& fam, FamilyKind kind);

struct CFixingScan {
  int c = 0;              // smallest C covering every enumerated function
  int functions = 0;      // number of folded weak polymorphisms scanned
  int max_arity = 0;
};

// Enumerates the folded weak polymorphisms up to l_max and reports the
// smallest C such that all of them are C-fixing.
CFixingScan c_fixing_scan(const Family& fam, int l_max);

} // namespace pcsp
