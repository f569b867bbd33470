#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcsp/bitvec.hpp"
#include "pcsp/errors.hpp"

namespace pcsp {

inline constexpr int kMaxFunArity = 20;

// Boolean function of arity L as a 2^L-entry truth table. Input encoding
// follows the repo convention: argument 1 is the lowest-order bit of the
// table index.
class BoolFun {
public:
  BoolFun() : BoolFun(1) {}
  explicit BoolFun(int arity);

  int arity() const { return arity_; }
  std::uint32_t table_size() const { return std::uint32_t{1} << arity_; }

  bool value(std::uint32_t input) const { return table_.test(input); }
  void set_value(std::uint32_t input, bool v) { table_.assign(input, v); }

  BoolFun negated() const;

  const BitVec& table() const { return table_; }

  friend bool operator==(const BoolFun& a, const BoolFun& b) {
    return a.arity_ == b.arity_ && a.table_ == b.table_;
  }
  friend bool operator<(const BoolFun& a, const BoolFun& b) {
    if (a.arity_ != b.arity_) return a.arity_ < b.arity_;
    return a.table_.words() < b.table_.words();
  }

private:
  int arity_;
  BitVec table_;
};

enum class FamilyKind {
  Zero,
  One,
  And,
  Or,
  Par,
  Maj,
  At,
  AntiPar,
  AntiMaj,
  AntiAt,
  AntiAnd,
  AntiOr,
};

const char* family_kind_name(FamilyKind k);
std::optional<FamilyKind> family_kind_from_name(const std::string& name);
bool kind_is_anti(FamilyKind k);
FamilyKind kind_base(FamilyKind k);     // AntiPar -> Par, Zero -> Zero, ...
bool kind_odd_only(FamilyKind k);       // Par/Maj/At and their antis

// Truth table of the named function at the given arity.
BoolFun make_named(FamilyKind kind, int arity);

BoolFun make_dictator(int arity, int coord); // coord is 0-based

struct FunFlags {
  bool folded = false;
  bool idempotent = false;
  bool degenerate = false; // f(0..0) == f(1..1)
};

FunFlags flags(const BoolFun& f);

// f^pi of arity R: f^pi(y) = f(x) with x_i = y_{pi[i]}; pi entries 0-based.
BoolFun project(const BoolFun& f, const std::vector<int>& pi, int r);

// Hex serialization of the table, low input index first (bit 4j is the
// least-significant bit of hex digit j).
std::string fun_to_hex(const BoolFun& f);
BoolFun fun_from_hex(int arity, const std::string& hex);

} // namespace pcsp
