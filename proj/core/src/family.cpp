#include "pcsp/family.hpp"

namespace pcsp {

PromiseRelation::PromiseRelation(Relation p_, Relation q_) : p(std::move(p_)), q(std::move(q_)) {
  require(p.arity() == q.arity(), Errc::ArityMismatch,
          "promise relation sides have arities " + std::to_string(p.arity()) + " and " +
              std::to_string(q.arity()));
  require(p.is_subset_of(q), Errc::PromiseViolation, "some member of P is not in Q");
}

PromiseRelation make_not() {
  Relation n = make_ham(2, weight_set({1}));
  return {n, n};
}

PromiseRelation make_set_zero() {
  Relation z = make_ham(1, weight_set({0}));
  return {z, z};
}

PromiseRelation make_set_one() {
  Relation o = make_ham(1, weight_set({1}));
  return {o, o};
}

int Family::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Family make_family(std::vector<PromiseRelation> relations, std::vector<std::string> names) {
  require(!relations.empty(), Errc::SchemaError, "family must contain at least one relation");
  Family fam;
  fam.pairs_ = std::move(relations);
  if (names.empty()) {
    for (std::size_t i = 0; i < fam.pairs_.size(); ++i) names.push_back("r" + std::to_string(i));
  }
  require(names.size() == fam.pairs_.size(), Errc::SchemaError,
          "name list length does not match relation list");
  fam.names_ = std::move(names);

  const PromiseRelation not_rel = make_not();
  const PromiseRelation set_zero = make_set_zero();
  const PromiseRelation set_one = make_set_one();
  for (const auto& pr : fam.pairs_) {
    fam.max_arity_ = std::max(fam.max_arity_, pr.arity());
    if (pr == not_rel) fam.contains_not_ = true;
    if (pr == set_zero) fam.contains_set_zero_ = true;
    if (pr == set_one) fam.contains_set_one_ = true;
    if (!symmetric_profile(pr.p) || !symmetric_profile(pr.q)) fam.all_symmetric_ = false;
  }
  return fam;
}

Family extend_family(const Family& fam, std::vector<PromiseRelation> extra,
                     std::vector<std::string> extra_names) {
  std::vector<PromiseRelation> rels = fam.pairs();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < fam.size(); ++i) names.push_back(fam.name(i));
  for (std::size_t i = 0; i < extra.size(); ++i) {
    rels.push_back(std::move(extra[i]));
    names.push_back(extra_names[i]);
  }
  return make_family(std::move(rels), std::move(names));
}

} // namespace pcsp
