#include "pcsp/oracle.hpp"

namespace pcsp {

const char* status_name(Status s) {
  switch (s) {
    case Status::PSat: return "p-sat";
    case Status::QUnsat: return "q-unsat";
    case Status::Gap: return "gap";
  }
  return "?";
}

namespace {

// Flattened clause view for the scan: variable list plus both side bitsets.
struct FlatClause {
  const std::vector<int>* vars;
  const Relation* p;
  const Relation* q;
};

std::vector<FlatClause> flatten(const Family& fam, const Instance& inst) {
  std::vector<FlatClause> out;
  out.reserve(inst.clauses.size());
  for (const Clause& c : inst.clauses)
    out.push_back({&c.vars, &fam.pair(c.rel).p, &fam.pair(c.rel).q});
  return out;
}

std::uint32_t project_tuple(const FlatClause& fc, std::uint64_t mask) {
  std::uint32_t tuple = 0;
  for (std::size_t i = 0; i < fc.vars->size(); ++i)
    tuple |= static_cast<std::uint32_t>((mask >> (*fc.vars)[i]) & 1) << i;
  return tuple;
}

} // namespace

Status brute_force_status(const Family& fam, const Instance& inst, int max_vars) {
  validate_instance(fam, inst);
  require(inst.num_vars <= max_vars, Errc::TooLarge,
          std::to_string(inst.num_vars) + " variables exceed the oracle cap of " +
              std::to_string(max_vars));
  const auto clauses = flatten(fam, inst);
  bool q_sat = false;
  const std::uint64_t total = std::uint64_t{1} << inst.num_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool q_ok = true;
    for (const auto& fc : clauses) {
      if (!fc.q->contains(project_tuple(fc, mask))) {
        q_ok = false;
        break;
      }
    }
    if (!q_ok) continue;
    q_sat = true;
    bool p_ok = true;
    for (const auto& fc : clauses) {
      if (!fc.p->contains(project_tuple(fc, mask))) {
        p_ok = false;
        break;
      }
    }
    if (p_ok) return Status::PSat; // a P-solution also solves Q
  }
  return q_sat ? Status::Gap : Status::QUnsat;
}

std::optional<Assignment> brute_force_solution(const Family& fam, const Instance& inst,
                                               Side side, int max_vars) {
  validate_instance(fam, inst);
  require(inst.num_vars <= max_vars, Errc::TooLarge,
          std::to_string(inst.num_vars) + " variables exceed the oracle cap of " +
              std::to_string(max_vars));
  const auto clauses = flatten(fam, inst);
  const std::uint64_t total = std::uint64_t{1} << inst.num_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (const auto& fc : clauses) {
      const Relation* rel = side == Side::P ? fc.p : fc.q;
      if (!rel->contains(project_tuple(fc, mask))) {
        ok = false;
        break;
      }
    }
    if (ok) return Assignment::from_mask(static_cast<std::uint32_t>(mask), inst.num_vars);
  }
  return std::nullopt;
}

} // namespace pcsp
