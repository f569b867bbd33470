#include "pcsp/classify.hpp"

#include <bit>

namespace pcsp {

namespace {

constexpr FamilyKind kProbeOrder[] = {
    FamilyKind::Zero,    FamilyKind::One,     FamilyKind::And,    FamilyKind::Or,
    FamilyKind::AntiAnd, FamilyKind::AntiOr,  FamilyKind::Par,    FamilyKind::Maj,
    FamilyKind::At,      FamilyKind::AntiPar, FamilyKind::AntiMaj, FamilyKind::AntiAt,
};

} // namespace

Classification classify(const Family& fam, bool assume_folded) {
  Classification out;
  if (!fam.all_symmetric()) {
    out.tag = Classification::Tag::OutOfScope;
    out.reason = "family contains a non-symmetric relation";
    return out;
  }
  if (!fam.contains_not() && !assume_folded) {
    out.tag = Classification::Tag::OutOfScope;
    out.reason = "foldedness not established: NOT absent and not asserted";
    return out;
  }
  for (FamilyKind kind : kProbeOrder) {
    const bool present = has_family(fam, kind);
    out.trace.push_back(std::string("probe ") + family_kind_name(kind) + ": " +
                        (present ? "present" : "absent"));
    if (present) {
      out.tag = Classification::Tag::Tractable;
      out.kind = kind;
      return out;
    }
  }
  out.tag = Classification::Tag::NPHard;
  return out;
}

Classification classify_explicit(int k, WeightSet s, WeightSet t) {
  require((s & ~t) == 0 && (t & ~weight_set_full(k)) == 0, Errc::WeightOutOfRange,
          "need S within T within {0..k}");
  const WeightSet interior = weight_set_range(1, k - 1);
  require((s & interior) != 0, Errc::HypothesisViolated,
          "the characterization needs an interior weight in S");

  Classification out;
  auto tractable = [&](FamilyKind kind, const char* cond) {
    out.tag = Classification::Tag::Tractable;
    out.kind = kind;
    out.trace.push_back(std::string("condition ") + cond + " holds");
    return out;
  };

  WeightSet odds = 0, evens = 0;
  for (int w = 0; w <= k; ++w) ((w & 1) ? odds : evens) |= WeightSet{1} << w;
  if (((s & ~odds) == 0 && (odds & ~t) == 0) || ((s & ~evens) == 0 && (evens & ~t) == 0))
    return tractable(FamilyKind::Par, "a");

  const WeightSet window =
      weight_set_full(k) &
      weight_set_range(std::max(2 * weight_set_min(s) - k + 1, 0),
                       std::min(2 * weight_set_max(s) - 1, k));
  if ((window & ~t) == 0) return tractable(FamilyKind::Maj, "b");

  if (std::popcount(s) == 1 && (weight_set_range(1, k - 1) & ~t) == 0)
    return tractable(FamilyKind::At, "c");

  out.tag = Classification::Tag::NPHard;
  out.trace.push_back("conditions a, b, c all fail");
  return out;
}

namespace {

SymmetricProfile profile_or_throw(const Relation& r) {
  auto p = symmetric_profile(r);
  require(p.has_value(), Errc::NonSymmetric, "relation is not symmetric");
  return *p;
}

} // namespace

PromiseRelation shrink_top(const PromiseRelation& pr) {
  const auto sp = profile_or_throw(pr.p);
  const auto sq = profile_or_throw(pr.q);
  const int k = pr.arity();
  require(k >= 2, Errc::ArityMismatch, "cannot shrink an arity-1 relation");
  const WeightSet drop = ~(WeightSet{1} << k);
  return {make_ham(k - 1, sp.weights & drop), make_ham(k - 1, sq.weights & drop)};
}

PromiseRelation shift_down(const PromiseRelation& pr) {
  const auto sp = profile_or_throw(pr.p);
  const auto sq = profile_or_throw(pr.q);
  const int k = pr.arity();
  require(k >= 2, Errc::ArityMismatch, "cannot shift an arity-1 relation");
  return {make_ham(k - 1, sp.weights >> 1), make_ham(k - 1, sq.weights >> 1)};
}

namespace {

PromiseRelation flip_pair(const PromiseRelation& pr) {
  return {flip_all(pr.p), flip_all(pr.q)};
}

PromiseRelation ham_pair(int k, WeightSet s, WeightSet t) {
  return {make_ham(k, s), make_ham(k, t)};
}

CanonicalRelaxation canonical_at_excluding(int k, WeightSet s, WeightSet t,
                                           std::vector<std::string> trace) {
  const WeightSet interior = weight_set_range(1, k - 1);
  const WeightSet closed = closure_symmetric(FamilyKind::At, {k, s}).weights;
  WeightSet viol = closed & ~t;

  if (viol & interior) {
    // Interior violating weight: relax P to a lone interior weight.
    const int a = weight_set_min(viol & interior);
    const int l = weight_set_min(s & interior);
    PromiseRelation cur = ham_pair(k, weight_set({l}), weight_set_full(k) & ~(WeightSet{1} << a));
    trace.push_back("relax to (Ham_" + std::to_string(k) + "({" + std::to_string(l) +
                    "}), full minus {" + std::to_string(a) + "})");
    const int k1 = std::max(l, a) + 1;
    for (int i = 0; i < k - k1; ++i) cur = shrink_top(cur);
    if (k != k1) trace.push_back("shrink_top x" + std::to_string(k - k1));
    const int shifts = std::min(l, a) - 1;
    for (int i = 0; i < shifts; ++i) cur = shift_down(cur);
    if (shifts) trace.push_back("shift_down x" + std::to_string(shifts));
    if (l > a) {
      cur = flip_pair(cur);
      trace.push_back("flip all coordinates");
    }
    return {cur, std::move(trace)};
  }

  // Violating weight at the boundary; normalize it to 0.
  if (weight_in(viol, k)) {
    WeightSet fs = 0, ft = 0;
    for (int w = 0; w <= k; ++w) {
      if (weight_in(s, w)) fs |= WeightSet{1} << (k - w);
      if (weight_in(t, w)) ft |= WeightSet{1} << (k - w);
    }
    s = fs;
    t = ft;
    trace.push_back("flip all coordinates (wlog violating weight 0)");
  }
  // Here 0 is generated but missing from T, so S has >= 2 weights, none 0,
  // at least one interior.
  const int l = weight_set_min(s & interior);
  int other = weight_set_max(s);
  if (other == l) other = weight_set_min(s);
  const int m = std::min(l, other), big = std::max(l, other);
  PromiseRelation cur = ham_pair(k, weight_set({m, big}), weight_set_range(1, k));
  trace.push_back("relax to (Ham_" + std::to_string(k) + "({" + std::to_string(m) + "," +
                  std::to_string(big) + "}), {1.." + std::to_string(k) + "})");
  for (int i = 0; i < k - big; ++i) cur = shrink_top(cur);
  if (k != big) trace.push_back("shrink_top x" + std::to_string(k - big));
  cur = flip_pair(cur);
  trace.push_back("flip all coordinates");
  return {cur, std::move(trace)};
}

CanonicalRelaxation canonical_maj_excluding(int k, WeightSet s, WeightSet t,
                                            std::vector<std::string> trace) {
  const WeightSet interior = weight_set_range(1, k - 1);
  WeightSet closed = closure_symmetric(FamilyKind::Maj, {k, s}).weights;
  int b = weight_set_min(closed & ~t);
  int l = weight_set_min(s & interior);
  if (l > b) {
    WeightSet fs = 0, ft = 0;
    for (int w = 0; w <= k; ++w) {
      if (weight_in(s, w)) fs |= WeightSet{1} << (k - w);
      if (weight_in(t, w)) ft |= WeightSet{1} << (k - w);
    }
    s = fs;
    t = ft;
    b = k - b;
    l = k - l;
    trace.push_back("flip all coordinates (wlog generator below violating weight)");
  }
  const int max_s = weight_set_max(s);

  if (b > max_s) {
    PromiseRelation cur =
        ham_pair(k, weight_set({max_s}), weight_set_full(k) & ~(WeightSet{1} << b));
    trace.push_back("relax to (Ham_" + std::to_string(k) + "({" + std::to_string(max_s) +
                    "}), full minus {" + std::to_string(b) + "})");
    for (int i = 0; i < k - b; ++i) cur = shrink_top(cur);
    if (k != b) trace.push_back("shrink_top x" + std::to_string(k - b));
    const int k2 = 2 * (b - max_s) + 1;
    for (int i = 0; i < b - k2; ++i) cur = shift_down(cur);
    if (b != k2) trace.push_back("shift_down x" + std::to_string(b - k2));
    return {cur, std::move(trace)};
  }

  PromiseRelation cur =
      ham_pair(k, weight_set({l, max_s}), weight_set_full(k) & ~(WeightSet{1} << b));
  trace.push_back("relax to (Ham_" + std::to_string(k) + "({" + std::to_string(l) + "," +
                  std::to_string(max_s) + "}), full minus {" + std::to_string(b) + "})");
  for (int i = 0; i < k - max_s; ++i) cur = shrink_top(cur);
  if (k != max_s) trace.push_back("shrink_top x" + std::to_string(k - max_s));
  for (int i = 0; i < l - 1; ++i) cur = shift_down(cur);
  if (l != 1) trace.push_back("shift_down x" + std::to_string(l - 1));
  return {cur, std::move(trace)};
}

} // namespace

CanonicalRelaxation canonical_excluding(const Family& fam, FamilyKind kind) {
  require(kind == FamilyKind::At || kind == FamilyKind::Maj, Errc::OutOfScope,
          "canonical relaxations exist for at and maj");
  require(fam.all_symmetric(), Errc::OutOfScope, "family must be symmetric");
  require(!has_family(fam, kind), Errc::FamilyPresent,
          std::string(family_kind_name(kind)) + " is a weak polymorphism family here");

  for (std::size_t i = 0; i < fam.size(); ++i) {
    const PromiseRelation& pr = fam.pair(i);
    if (pr.p.empty()) continue;
    const auto sp = *symmetric_profile(pr.p);
    const auto sq = *symmetric_profile(pr.q);
    const WeightSet closed = closure_symmetric(kind, sp).weights;
    if ((closed & ~sq.weights) == 0) continue;
    std::vector<std::string> trace{"violating pair: " + fam.name(i)};
    if (kind == FamilyKind::At)
      return canonical_at_excluding(pr.arity(), sp.weights, sq.weights, std::move(trace));
    return canonical_maj_excluding(pr.arity(), sp.weights, sq.weights, std::move(trace));
  }
  fail(Errc::Internal, "exclusion reported but no violating pair found");
}

CFixingScan c_fixing_scan(const Family& fam, int l_max) {
  require(l_max >= 1 && l_max <= 5, Errc::TooLarge, "scan arity cap is 5");
  const Classification cls = classify(fam);
  require(cls.np_hard(), Errc::NotHard, "the scan is defined for NP-hard families");

  CFixingScan out;
  out.max_arity = l_max;
  EnumOptions opt;
  opt.folded_only = true;
  opt.max_arity_cap = l_max;
  for (int l = 1; l <= l_max; ++l) {
    for (const BoolFun& f : enumerate_weak_polymorphisms(fam, l, opt)) {
      const auto fix = is_c_fixing(f, l);
      // A folded function is always L-fixing (the full coordinate set works).
      require(fix.has_value(), Errc::Internal, "missing fixing set for a folded function");
      out.c = std::max(out.c, static_cast<int>(fix->size()));
      ++out.functions;
    }
  }
  return out;
}

} // namespace pcsp
