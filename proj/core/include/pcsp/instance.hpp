#pragma once

#include <cstdint>
#include <vector>

#include "pcsp/family.hpp"

namespace pcsp {

struct Clause {
  int rel = 0;                // index into the family
  std::vector<int> vars;      // length = relation arity, repetition allowed

  friend bool operator==(const Clause&, const Clause&) = default;
};

// Pair of formulas (Psi_P, Psi_Q) sharing the variable-choice function: the
// clause list stores that function once, each side reads its own relation.
struct Instance {
  int num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Validates variable ranges and clause arities against the family.
void validate_instance(const Family& fam, const Instance& inst);

struct Assignment {
  std::vector<std::uint8_t> bits;

  Assignment() = default;
  explicit Assignment(std::vector<std::uint8_t> b) : bits(std::move(b)) {}
  static Assignment from_mask(std::uint32_t mask, int n);

  int size() const { return static_cast<int>(bits.size()); }
  bool operator[](int i) const { return bits[i] != 0; }

  Assignment negated() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

enum class Side { P, Q };

// True iff every clause's projected tuple is a member of the chosen side.
bool evaluate(const Family& fam, const Instance& inst, const Assignment& a, Side side);

} // namespace pcsp
