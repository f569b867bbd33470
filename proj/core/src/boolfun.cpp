#include "pcsp/boolfun.hpp"

#include <bit>

namespace pcsp {

BoolFun::BoolFun(int arity) : arity_(arity) {
  require(arity >= 1 && arity <= kMaxFunArity, Errc::ArityMismatch,
          "function arity " + std::to_string(arity) + " outside [1, " +
              std::to_string(kMaxFunArity) + "]");
  table_ = BitVec(std::size_t{1} << arity);
}

BoolFun BoolFun::negated() const {
  BoolFun out(arity_);
  for (std::uint32_t i = 0; i < table_size(); ++i) out.set_value(i, !value(i));
  return out;
}

const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Zero: return "zero";
    case FamilyKind::One: return "one";
    case FamilyKind::And: return "and";
    case FamilyKind::Or: return "or";
    case FamilyKind::Par: return "par";
    case FamilyKind::Maj: return "maj";
    case FamilyKind::At: return "at";
    case FamilyKind::AntiPar: return "anti-par";
    case FamilyKind::AntiMaj: return "anti-maj";
    case FamilyKind::AntiAt: return "anti-at";
    case FamilyKind::AntiAnd: return "anti-and";
    case FamilyKind::AntiOr: return "anti-or";
  }
  return "?";
}

std::optional<FamilyKind> family_kind_from_name(const std::string& name) {
  for (FamilyKind k :
       {FamilyKind::Zero, FamilyKind::One, FamilyKind::And, FamilyKind::Or, FamilyKind::Par,
        FamilyKind::Maj, FamilyKind::At, FamilyKind::AntiPar, FamilyKind::AntiMaj,
        FamilyKind::AntiAt, FamilyKind::AntiAnd, FamilyKind::AntiOr})
    if (name == family_kind_name(k)) return k;
  return std::nullopt;
}

bool kind_is_anti(FamilyKind k) {
  switch (k) {
    case FamilyKind::AntiPar:
    case FamilyKind::AntiMaj:
    case FamilyKind::AntiAt:
    case FamilyKind::AntiAnd:
    case FamilyKind::AntiOr:
      return true;
    default:
      return false;
  }
}

FamilyKind kind_base(FamilyKind k) {
  switch (k) {
    case FamilyKind::AntiPar: return FamilyKind::Par;
    case FamilyKind::AntiMaj: return FamilyKind::Maj;
    case FamilyKind::AntiAt: return FamilyKind::At;
    case FamilyKind::AntiAnd: return FamilyKind::And;
    case FamilyKind::AntiOr: return FamilyKind::Or;
    default: return k;
  }
}

bool kind_odd_only(FamilyKind k) {
  switch (kind_base(k)) {
    case FamilyKind::Par:
    case FamilyKind::Maj:
    case FamilyKind::At:
      return true;
    default:
      return false;
  }
}

BoolFun make_named(FamilyKind kind, int arity) {
  require(!kind_odd_only(kind) || (arity % 2 == 1), Errc::EvenArity,
          std::string(family_kind_name(kind)) + " is only defined at odd arities");
  const FamilyKind base = kind_base(kind);
  const bool anti = kind_is_anti(kind) || kind == FamilyKind::One; // One = anti-Zero
  BoolFun f(arity);
  for (std::uint32_t x = 0; x < f.table_size(); ++x) {
    const int ones = std::popcount(x);
    bool v = false;
    switch (base) {
      case FamilyKind::Zero:
      case FamilyKind::One:
        v = false;
        break;
      case FamilyKind::And:
        v = ones == arity;
        break;
      case FamilyKind::Or:
        v = ones > 0;
        break;
      case FamilyKind::Par:
        v = ones & 1;
        break;
      case FamilyKind::Maj:
        v = 2 * ones > arity;
        break;
      case FamilyKind::At: {
        const int odd_ones = std::popcount(x & 0x55555555u);
        const int even_ones = ones - odd_ones;
        v = odd_ones > even_ones;
        break;
      }
      default:
        break;
    }
    f.set_value(x, anti ? !v : v);
  }
  return f;
}

BoolFun make_dictator(int arity, int coord) {
  require(coord >= 0 && coord < arity, Errc::ArityMismatch, "dictator coordinate out of range");
  BoolFun f(arity);
  for (std::uint32_t x = 0; x < f.table_size(); ++x) f.set_value(x, (x >> coord) & 1);
  return f;
}

FunFlags flags(const BoolFun& f) {
  FunFlags out;
  const std::uint32_t all = f.table_size() - 1;
  out.folded = true;
  for (std::uint32_t x = 0; x < f.table_size(); ++x)
    if (f.value(x) == f.value(~x & all)) {
      out.folded = false;
      break;
    }
  out.idempotent = !f.value(0) && f.value(all);
  out.degenerate = f.value(0) == f.value(all);
  return out;
}

BoolFun project(const BoolFun& f, const std::vector<int>& pi, int r) {
  require(static_cast<int>(pi.size()) == f.arity(), Errc::ArityMismatch,
          "projection map must be total on the function's arity");
  for (int t : pi)
    require(t >= 0 && t < r, Errc::ArityMismatch, "projection target out of range");
  BoolFun out(r);
  for (std::uint32_t y = 0; y < out.table_size(); ++y) {
    std::uint32_t x = 0;
    for (int i = 0; i < f.arity(); ++i) x |= ((y >> pi[i]) & 1) << i;
    out.set_value(y, f.value(x));
  }
  return out;
}

std::string fun_to_hex(const BoolFun& f) {
  static const char* digits = "0123456789abcdef";
  const std::uint32_t n = f.table_size();
  std::string out;
  for (std::uint32_t base = 0; base < n; base += 4) {
    int nibble = 0;
    for (std::uint32_t b = 0; b < 4 && base + b < n; ++b)
      nibble |= int{f.value(base + b)} << b;
    out.push_back(digits[nibble]);
  }
  return out;
}

BoolFun fun_from_hex(int arity, const std::string& hex) {
  BoolFun f(arity);
  const std::uint32_t n = f.table_size();
  const std::uint32_t want = (n + 3) / 4;
  require(hex.size() == want, Errc::ParseError,
          "expected " + std::to_string(want) + " hex digits for arity " + std::to_string(arity));
  for (std::uint32_t j = 0; j < want; ++j) {
    const char c = hex[j];
    int nibble;
    if (c >= '0' && c <= '9')
      nibble = c - '0';
    else if (c >= 'a' && c <= 'f')
      nibble = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      nibble = c - 'A' + 10;
    else
      fail(Errc::ParseError, std::string("bad hex digit '") + c + "'");
    for (std::uint32_t b = 0; b < 4 && 4 * j + b < n; ++b)
      f.set_value(4 * j + b, (nibble >> b) & 1);
  }
  return f;
}

} // namespace pcsp
