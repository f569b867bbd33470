#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "pcsp/family.hpp"
#include "pcsp/instance.hpp"
#include "pcsp/polymorphism.hpp"

namespace pcsp::test {

// Fixture families used across the suites. NOT is always included so the
// families are folded.

// (2+eps)-SAT at k = 1, the hard variant: P = Q = nonzero triples.
inline Family fam_two_eps_hard() {
  return make_family({{make_ham(3, weight_set_range(1, 3)), make_ham(3, weight_set_range(1, 3))},
                      make_not()},
                     {"R", "NOT"});
}

// The easy variant: |x| >= 2 promised, any nonzero accepted.
inline Family fam_two_eps_easy() {
  return make_family({{make_ham(3, weight_set({2, 3})), make_ham(3, weight_set_range(1, 3))},
                      make_not()},
                     {"R", "NOT"});
}

// Hypergraph discrepancy, arity 5 (hard).
inline Family fam_discrepancy5() {
  return make_family({{make_ham(5, weight_set({2, 3})), make_ham(5, weight_set_range(1, 4))},
                      make_not()},
                     {"R", "NOT"});
}

// Even-arity balanced variant, arity 4 (tractable).
inline Family fam_balanced4() {
  return make_family({{make_ham(4, weight_set({2})), make_ham(4, weight_set_range(1, 3))},
                      make_not()},
                     {"R", "NOT"});
}

// Hitting-number family (one-in-three relaxed), tractable via AT.
inline Family fam_hitting() {
  return make_family({{make_ham(3, weight_set({1})), make_ham(3, weight_set({1, 2}))},
                      make_not()},
                     {"R", "NOT"});
}

// The anti-parity showcase.
inline Family fam_anti_parity() {
  return make_family({{make_ham(5, weight_set({2})), make_ham(5, weight_set({1, 2, 3, 5}))},
                      make_not()},
                     {"R", "NOT"});
}

// Anti-majority separation: maj holds on the negated family only.
inline Family fam_anti_majority() {
  return make_family({{make_ham(5, weight_set({1})), make_ham(5, weight_set({1, 4, 5}))},
                      make_not()},
                     {"NOT5", "NOT"});
}

// Non-symmetric Horn-style family (AND family holds).
inline Family fam_horn() {
  Relation p(2), q(2);
  p.insert(0b01); // (1,0)
  p.insert(0b11); // (1,1)
  q.insert(0b00);
  q.insert(0b01);
  q.insert(0b11);
  return make_family({{p, q}}, {"H"});
}

// Deterministic instance sampler over a family.
inline Instance random_instance(const Family& fam, int num_vars, int num_clauses,
                                std::mt19937& rng) {
  Instance inst;
  inst.num_vars = num_vars;
  std::uniform_int_distribution<int> rel_pick(0, static_cast<int>(fam.size()) - 1);
  std::uniform_int_distribution<int> var_pick(0, num_vars - 1);
  for (int c = 0; c < num_clauses; ++c) {
    Clause cl;
    cl.rel = rel_pick(rng);
    cl.vars.resize(fam.pair(cl.rel).arity());
    for (int& v : cl.vars) v = var_pick(rng);
    inst.clauses.push_back(std::move(cl));
  }
  return inst;
}

// Independent closure oracle: the parity closure equals the set of XORs of
// odd-sized subsets of the members (one application already closes).
inline Relation parity_closure_oracle(const Relation& r) {
  const auto members = r.members();
  Relation out(r.arity());
  for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << members.size()); ++sub) {
    if (!(std::popcount(sub) & 1)) continue;
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      if ((sub >> i) & 1) x ^= members[i];
    out.insert(x);
  }
  return out;
}

} // namespace pcsp::test
