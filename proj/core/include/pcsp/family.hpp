#pragma once

#include <string>
#include <vector>

#include "pcsp/relation.hpp"

namespace pcsp {

// Pair (P, Q) with P a subset of Q, same arity. Checked at construction.
struct PromiseRelation {
  Relation p;
  Relation q;

  PromiseRelation() = default;
  PromiseRelation(Relation p_, Relation q_);

  int arity() const { return p.arity(); }

  friend bool operator==(const PromiseRelation&, const PromiseRelation&) = default;
};

PromiseRelation make_not();      // ({(0,1),(1,0)}, same)
PromiseRelation make_set_zero(); // ({(0)}, {(0)})
PromiseRelation make_set_one();  // ({(1)}, {(1)})

class Family {
public:
  Family() = default;

  std::size_t size() const { return pairs_.size(); }
  const PromiseRelation& pair(std::size_t i) const { return pairs_[i]; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<PromiseRelation>& pairs() const { return pairs_; }

  int index_of(const std::string& name) const; // -1 when absent

  bool contains_not() const { return contains_not_; }
  bool contains_set_zero() const { return contains_set_zero_; }
  bool contains_set_one() const { return contains_set_one_; }
  bool all_symmetric() const { return all_symmetric_; }
  int max_arity() const { return max_arity_; }

  friend Family make_family(std::vector<PromiseRelation> relations,
                            std::vector<std::string> names);

private:
  std::vector<PromiseRelation> pairs_;
  std::vector<std::string> names_;
  bool contains_not_ = false;
  bool contains_set_zero_ = false;
  bool contains_set_one_ = false;
  bool all_symmetric_ = true;
  int max_arity_ = 0;
};

// Validates each pair and derives the flags. Names may be empty, in which
// case r0, r1, ... are used.
Family make_family(std::vector<PromiseRelation> relations, std::vector<std::string> names = {});

// Family plus extra pairs (used for the idempotence transforms).
Family extend_family(const Family& fam, std::vector<PromiseRelation> extra,
                     std::vector<std::string> extra_names);

} // namespace pcsp
