#include "pcsp/instance.hpp"

namespace pcsp {

void validate_instance(const Family& fam, const Instance& inst) {
  for (std::size_t i = 0; i < inst.clauses.size(); ++i) {
    const Clause& c = inst.clauses[i];
    require(c.rel >= 0 && c.rel < static_cast<int>(fam.size()), Errc::SchemaError,
            "clause " + std::to_string(i) + " references unknown relation");
    require(static_cast<int>(c.vars.size()) == fam.pair(c.rel).arity(), Errc::SchemaError,
            "clause " + std::to_string(i) + " has " + std::to_string(c.vars.size()) +
                " variables, relation arity is " + std::to_string(fam.pair(c.rel).arity()));
    for (int v : c.vars)
      require(v >= 0 && v < inst.num_vars, Errc::SchemaError,
              "clause " + std::to_string(i) + " uses variable " + std::to_string(v) +
                  " outside [0, " + std::to_string(inst.num_vars) + ")");
  }
}

Assignment Assignment::from_mask(std::uint32_t mask, int n) {
  Assignment a;
  a.bits.resize(n);
  for (int i = 0; i < n; ++i) a.bits[i] = (mask >> i) & 1;
  return a;
}

Assignment Assignment::negated() const {
  Assignment out = *this;
  for (auto& b : out.bits) b ^= 1;
  return out;
}

bool evaluate(const Family& fam, const Instance& inst, const Assignment& a, Side side) {
  require(a.size() == inst.num_vars, Errc::LengthMismatch,
          "assignment length " + std::to_string(a.size()) + " vs " +
              std::to_string(inst.num_vars) + " variables");
  for (const Clause& c : inst.clauses) {
    std::uint32_t tuple = 0;
    for (std::size_t i = 0; i < c.vars.size(); ++i)
      tuple |= std::uint32_t{a[c.vars[i]]} << i;
    const PromiseRelation& pr = fam.pair(c.rel);
    if (!(side == Side::P ? pr.p : pr.q).contains(tuple)) return false;
  }
  return true;
}

} // namespace pcsp
