#pragma once

#include <optional>
#include <vector>

#include "pcsp/boolfun.hpp"
#include "pcsp/family.hpp"

namespace pcsp {

// Members of p, one per argument of f, whose coordinatewise image leaves q.
// nullopt = f is a weak polymorphism of (p, q).
std::optional<std::vector<std::uint32_t>> weak_poly_counterexample(const BoolFun& f,
                                                                   const PromiseRelation& pr);

inline bool is_weak_polymorphism(const BoolFun& f, const PromiseRelation& pr) {
  return !weak_poly_counterexample(f, pr).has_value();
}

bool is_weak_polymorphism(const BoolFun& f, const Family& fam);

// O_f(r): every coordinatewise application of f to members of r.
// f is a weak polymorphism of (p, q) iff image(f, p) is a subset of q.
Relation image(const BoolFun& f, const Relation& r);

// Least superset of r closed under coordinatewise XOR of any 3 members;
// equals the union of O_{Par_L}(r) over odd L.
Relation closure_parity(const Relation& r);

// Closed under pairwise meet (AND) resp. join (OR); equals the union of the
// AND_L (OR_L) images over all L.
Relation closure_meet(const Relation& r);
Relation closure_join(const Relation& r);

// Closed forms for the full Maj/AT closures of symmetric relations.
// Maj: S inside {0,k} stays; otherwise {0..k} meets {2 min S - k + 1 .. 2 max S - 1}.
// AT:  S inside {0,k} stays; singleton interior S gives {1..k-1}; any other S
//      with an interior weight contains a usable pair and gives {0..k}.
SymmetricProfile closure_symmetric(FamilyKind kind, const SymmetricProfile& prof);

// Union of image(f_L, r) over odd L <= l_max for the named kind. Oracle for
// the closed forms above; computed by counting DPs, not literal selections.
Relation brute_force_closure(const Relation& r, FamilyKind kind, int l_max);

// Image of the single named function at one arity (shares the closure DPs).
Relation image_named(FamilyKind kind, int arity, const Relation& r);

// Whether the named function family, at every (odd, where applicable) arity,
// is a weak polymorphism of every pair in the family.
bool has_family(const Family& fam, FamilyKind kind);

// Fixing set of size <= c_max: zeroing those coordinates pins f to f(0..0).
// Coordinates are 0-based; smallest sets are tried first.
std::optional<std::vector<int>> is_c_fixing(const BoolFun& f, int c_max);

// One entry per selection of `arity` members of p (with repetition), giving
// the table index each relation coordinate reads: index i is the bit string
// of coordinate i across the selection. Shared by the enumeration search and
// the long-code / Galois gadget builders.
std::vector<std::vector<std::uint32_t>> polymorphism_constraint_tuples(const Relation& p,
                                                                       int arity,
                                                                       std::size_t cost_cap);

struct EnumOptions {
  bool folded_only = false;
  bool idempotent_only = false;
  int max_arity_cap = 4; // guard for the backtracking search
};

// Exactly the arity-L functions passing the weak-polymorphism check against
// every pair, filtered by flags. Backtracking over table entries with
// last-entry constraint checks; folded/idempotent filters prune the search.
std::vector<BoolFun> enumerate_weak_polymorphisms(const Family& fam, int arity,
                                                  const EnumOptions& opt = {});

} // namespace pcsp
