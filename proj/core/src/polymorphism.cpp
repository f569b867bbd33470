#include "pcsp/polymorphism.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace pcsp {

namespace {

constexpr std::size_t kSelectionCostCap = std::size_t{1} << 22;

// Number of selections |members|^arity, saturating past the cost cap.
std::size_t selection_count(std::size_t members, int arity) {
  std::size_t total = 1;
  for (int i = 0; i < arity; ++i) {
    if (total > kSelectionCostCap) return SIZE_MAX;
    total *= members;
  }
  return total;
}

} // namespace

std::optional<std::vector<std::uint32_t>> weak_poly_counterexample(const BoolFun& f,
                                                                   const PromiseRelation& pr) {
  const auto members = pr.p.members();
  if (members.empty()) return std::nullopt;
  const int l = f.arity();
  const int k = pr.arity();
  require(selection_count(members.size(), l) <= kSelectionCostCap, Errc::TooLarge,
          "weak polymorphism check needs |P|^L selections beyond the cost cap");

  std::vector<std::size_t> pick(l, 0);
  while (true) {
    std::uint32_t out = 0;
    for (int i = 0; i < k; ++i) {
      std::uint32_t col = 0;
      for (int j = 0; j < l; ++j) col |= ((members[pick[j]] >> i) & 1) << j;
      out |= std::uint32_t{f.value(col)} << i;
    }
    if (!pr.q.contains(out)) {
      std::vector<std::uint32_t> witness(l);
      for (int j = 0; j < l; ++j) witness[j] = members[pick[j]];
      return witness;
    }
    int j = 0;
    while (j < l && ++pick[j] == members.size()) pick[j++] = 0;
    if (j == l) break;
  }
  return std::nullopt;
}

bool is_weak_polymorphism(const BoolFun& f, const Family& fam) {
  for (const auto& pr : fam.pairs())
    if (weak_poly_counterexample(f, pr)) return false;
  return true;
}

Relation image(const BoolFun& f, const Relation& r) {
  Relation out(r.arity());
  const auto members = r.members();
  if (members.empty()) return out;
  const int l = f.arity();
  const int k = r.arity();
  require(selection_count(members.size(), l) <= kSelectionCostCap, Errc::TooLarge,
          "image needs |P|^L selections beyond the cost cap");

  std::vector<std::size_t> pick(l, 0);
  while (true) {
    std::uint32_t out_tuple = 0;
    for (int i = 0; i < k; ++i) {
      std::uint32_t col = 0;
      for (int j = 0; j < l; ++j) col |= ((members[pick[j]] >> i) & 1) << j;
      out_tuple |= std::uint32_t{f.value(col)} << i;
    }
    out.insert(out_tuple);
    int j = 0;
    while (j < l && ++pick[j] == members.size()) pick[j++] = 0;
    if (j == l) break;
  }
  return out;
}

Relation closure_parity(const Relation& r) {
  require(!r.empty(), Errc::EmptyRelation, "parity closure of the empty relation");
  const int k = r.arity();
  Relation cur = r;
  // XOR3 fixpoint; each pass folds pairwise differences back over the set.
  while (true) {
    const auto members = cur.members();
    std::vector<std::uint32_t> diffs;
    diffs.reserve(members.size() * members.size());
    BitVec seen(std::size_t{1} << k);
    for (auto x : members)
      for (auto y : members) {
        const std::uint32_t d = x ^ y;
        if (!seen.test(d)) {
          seen.set(d);
          diffs.push_back(d);
        }
      }
    Relation next(k);
    for (auto d : diffs)
      for (auto z : members) next.insert(d ^ z);
    if (next == cur) return cur;
    cur = next;
  }
}

namespace {

Relation pairwise_closure(const Relation& r, bool meet) {
  const int k = r.arity();
  Relation out = r;
  std::vector<std::uint32_t> work = r.members();
  std::size_t head = 0;
  while (head < work.size()) {
    const std::uint32_t a = work[head++];
    const auto snapshot = out.members();
    for (auto b : snapshot) {
      const std::uint32_t c = meet ? (a & b) : (a | b);
      if (!out.contains(c)) {
        out.insert(c);
        work.push_back(c);
      }
    }
  }
  return out;
}

} // namespace

Relation closure_meet(const Relation& r) { return pairwise_closure(r, true); }
Relation closure_join(const Relation& r) { return pairwise_closure(r, false); }

SymmetricProfile closure_symmetric(FamilyKind kind, const SymmetricProfile& prof) {
  require(kind == FamilyKind::Maj || kind == FamilyKind::At, Errc::ArityMismatch,
          "closed-form closure exists for maj and at only");
  require(prof.weights != 0, Errc::EmptyWeights, "closure of an empty weight set");
  const int k = prof.arity;
  const WeightSet edge = weight_set({0}) | (WeightSet{1} << k);
  if ((prof.weights & ~edge) == 0) return prof;
  if (kind == FamilyKind::Maj) {
    const int lo = 2 * weight_set_min(prof.weights) - k + 1;
    const int hi = 2 * weight_set_max(prof.weights) - 1;
    return {k, weight_set_range(std::max(lo, 0), std::min(hi, k))};
  }
  // AT: a lone interior weight generates exactly the interior; any larger set
  // with an interior weight contains a pair other than {0, k} and generates
  // everything.
  if (std::popcount(prof.weights) == 1) return {k, weight_set_range(1, k - 1)};
  return {k, weight_set_full(k)};
}

namespace {

// Reachable per-coordinate count vectors after `steps` additions of member
// rows, states packed in mixed radix `radix` per coordinate.
std::vector<std::uint8_t> count_dp(const std::vector<std::uint32_t>& members, int k, int steps,
                                   int radix, const std::vector<std::size_t>& place,
                                   std::vector<std::uint8_t> start) {
  std::vector<std::uint8_t> cur = std::move(start);
  std::vector<std::uint8_t> next(cur.size());
  for (int s = 0; s < steps; ++s) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t st = 0; st < cur.size(); ++st) {
      if (!cur[st]) continue;
      for (auto m : members) {
        std::size_t to = st;
        for (int i = 0; i < k; ++i)
          if ((m >> i) & 1) to += place[i];
        next[to] = 1;
      }
    }
    std::swap(cur, next);
  }
  (void)radix;
  return cur;
}

std::vector<std::size_t> radix_places(int k, int radix) {
  std::vector<std::size_t> place(k);
  std::size_t p = 1;
  for (int i = 0; i < k; ++i) {
    place[i] = p;
    p *= radix;
  }
  return place;
}

void require_state_space(int k, int radix) {
  double bits = k * std::log2(double(radix));
  require(bits <= 26.0, Errc::TooLarge, "closure DP state space beyond the cap");
}

} // namespace

Relation image_named(FamilyKind kind, int arity, const Relation& r) {
  require(kind == FamilyKind::Par || kind == FamilyKind::Maj || kind == FamilyKind::At,
          Errc::ArityMismatch, "counting image exists for par, maj and at only");
  const int k = r.arity();
  const int l = arity;
  Relation out(k);
  const auto members = r.members();
  if (members.empty()) return out;
  require(l % 2 == 1, Errc::EvenArity, "named kind is odd-arity only");

  if (kind == FamilyKind::Par) {
    // Parity only needs the XOR of the chosen rows.
    BitVec cur(std::size_t{1} << k);
    cur.set(0);
    for (int s = 0; s < l; ++s) {
      BitVec n(std::size_t{1} << k);
      for (std::uint32_t st = 0; st < (std::uint32_t{1} << k); ++st)
        if (cur.test(st))
          for (auto m : members) n.set(st ^ m);
      cur = n;
    }
    for (std::uint32_t st = 0; st < (std::uint32_t{1} << k); ++st)
      if (cur.test(st)) out.insert(st);
    return out;
  }

  if (kind == FamilyKind::Maj) {
    const int radix = l + 1;
    require_state_space(k, radix);
    const auto place = radix_places(k, radix);
    std::size_t states = 1;
    for (int i = 0; i < k; ++i) states *= radix;
    std::vector<std::uint8_t> start(states, 0);
    start[0] = 1;
    auto reach = count_dp(members, k, l, radix, place, std::move(start));
    for (std::size_t st = 0; st < reach.size(); ++st) {
      if (!reach[st]) continue;
      std::uint32_t tuple = 0;
      std::size_t rem = st;
      for (int i = 0; i < k; ++i) {
        const int c = static_cast<int>(rem % radix);
        rem /= radix;
        if (2 * c > l) tuple |= std::uint32_t{1} << i;
      }
      out.insert(tuple);
    }
    return out;
  }

  // AT: t rows weighted +1 (odd slots), t-1 rows weighted -1 (even slots);
  // coordinate values live in [-(t-1), t], offset to [0, 2t-1].
  const int t = (l + 1) / 2;
  const int radix = 2 * t;
  require_state_space(k, radix);
  const auto place = radix_places(k, radix);
  std::size_t states = 1;
  for (int i = 0; i < k; ++i) states *= radix;

  std::size_t offset_state = 0;
  for (int i = 0; i < k; ++i) offset_state += std::size_t(t - 1) * place[i];
  std::vector<std::uint8_t> start(states, 0);
  start[offset_state] = 1;
  auto plus = count_dp(members, k, t, radix, place, std::move(start));

  // Subtraction phase: add rows with weight -1.
  std::vector<std::uint8_t> cur = std::move(plus);
  std::vector<std::uint8_t> next(states);
  for (int s = 0; s < t - 1; ++s) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t st = 0; st < states; ++st) {
      if (!cur[st]) continue;
      for (auto m : members) {
        std::size_t to = st;
        for (int i = 0; i < k; ++i)
          if ((m >> i) & 1) to -= place[i];
        next[to] = 1;
      }
    }
    std::swap(cur, next);
  }
  for (std::size_t st = 0; st < states; ++st) {
    if (!cur[st]) continue;
    std::uint32_t tuple = 0;
    std::size_t rem = st;
    for (int i = 0; i < k; ++i) {
      const int val = static_cast<int>(rem % radix) - (t - 1);
      rem /= radix;
      if (val > 0) tuple |= std::uint32_t{1} << i;
    }
    out.insert(tuple);
  }
  return out;
}

Relation brute_force_closure(const Relation& r, FamilyKind kind, int l_max) {
  require(l_max >= 1 && l_max % 2 == 1, Errc::EvenArity, "l_max must be odd");
  Relation out(r.arity());
  for (int l = 1; l <= l_max; l += 2) {
    const Relation img = image_named(kind, l, r);
    for (auto t : img.members()) out.insert(t);
  }
  return out;
}

namespace {

bool has_family_base(const Family& fam, FamilyKind kind,
                     const std::vector<PromiseRelation>& pairs) {
  switch (kind) {
    case FamilyKind::Zero:
      for (const auto& pr : pairs)
        if (!pr.p.empty() && !pr.q.contains(0)) return false;
      return true;
    case FamilyKind::One:
      for (const auto& pr : pairs)
        if (!pr.p.empty() && !pr.q.contains(pr.q.tuple_count() - 1)) return false;
      return true;
    case FamilyKind::And:
      for (const auto& pr : pairs)
        if (!closure_meet(pr.p).is_subset_of(pr.q)) return false;
      return true;
    case FamilyKind::Or:
      for (const auto& pr : pairs)
        if (!closure_join(pr.p).is_subset_of(pr.q)) return false;
      return true;
    case FamilyKind::Par:
      for (const auto& pr : pairs)
        if (!pr.p.empty() && !closure_parity(pr.p).is_subset_of(pr.q)) return false;
      return true;
    case FamilyKind::Maj:
    case FamilyKind::At:
      for (const auto& pr : pairs) {
        if (pr.p.empty()) continue;
        const auto sp = symmetric_profile(pr.p);
        const auto sq = symmetric_profile(pr.q);
        require(sp && sq, Errc::UnsupportedNonSymmetric,
                "for-all-arity maj/at membership needs symmetric relations");
        const WeightSet closed = closure_symmetric(kind, *sp).weights;
        if ((closed & ~sq->weights) != 0) return false;
      }
      return true;
    default:
      break;
  }
  (void)fam;
  fail(Errc::ArityMismatch, "unhandled family kind");
}

} // namespace

bool has_family(const Family& fam, FamilyKind kind) {
  if (!kind_is_anti(kind)) return has_family_base(fam, kind, fam.pairs());
  // Anti-X holds iff X holds against (P, flip Q); the unary anti member
  // already forces P inside the flipped Q.
  std::vector<PromiseRelation> negated;
  negated.reserve(fam.size());
  for (const auto& pr : fam.pairs()) {
    Relation nq = flip_all(pr.q);
    if (!pr.p.is_subset_of(nq)) return false;
    negated.emplace_back(pr.p, std::move(nq));
  }
  return has_family_base(fam, kind_base(kind), negated);
}

std::optional<std::vector<int>> is_c_fixing(const BoolFun& f, int c_max) {
  require(flags(f).folded, Errc::NotFolded, "fixing sets are defined for folded functions");
  const int l = f.arity();
  const std::uint32_t all = f.table_size() - 1;
  const bool base = f.value(0);
  const int bound = std::min(c_max, l);

  std::vector<int> combo;
  // Smallest-first exhaustive subset search.
  for (int size = 0; size <= bound; ++size) {
    combo.assign(size, 0);
    for (int i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      std::uint32_t s_mask = 0;
      for (int c : combo) s_mask |= std::uint32_t{1} << c;
      const std::uint32_t free_mask = all & ~s_mask;
      bool fixing = true;
      // All inputs with zeros on S are the submasks of the complement.
      std::uint32_t sub = free_mask;
      while (true) {
        if (f.value(sub) != base) {
          fixing = false;
          break;
        }
        if (sub == 0) break;
        sub = (sub - 1) & free_mask;
      }
      if (fixing) return combo;
      // Next combination.
      int i = size - 1;
      while (i >= 0 && combo[i] == l - size + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> polymorphism_constraint_tuples(const Relation& p,
                                                                       int arity,
                                                                       std::size_t cost_cap) {
  const auto members = p.members();
  std::vector<std::vector<std::uint32_t>> out;
  if (members.empty()) return out;
  require(selection_count(members.size(), arity) <= cost_cap, Errc::TooLarge,
          "constraint expansion beyond the cost cap");
  const int k = p.arity();
  std::vector<std::size_t> pick(arity, 0);
  while (true) {
    std::vector<std::uint32_t> idx(k, 0);
    for (int i = 0; i < k; ++i) {
      std::uint32_t col = 0;
      for (int j = 0; j < arity; ++j) col |= ((members[pick[j]] >> i) & 1) << j;
      idx[i] = col;
    }
    out.push_back(std::move(idx));
    int j = 0;
    while (j < arity && ++pick[j] == members.size()) pick[j++] = 0;
    if (j == arity) break;
  }
  return out;
}

namespace {

struct EnumConstraint {
  std::vector<std::uint32_t> idx;
  const Relation* q;
};

} // namespace

std::vector<BoolFun> enumerate_weak_polymorphisms(const Family& fam, int arity,
                                                  const EnumOptions& opt) {
  require(arity >= 1 && arity <= opt.max_arity_cap, Errc::TooLarge,
          "enumeration arity beyond the cap of " + std::to_string(opt.max_arity_cap));
  const std::uint32_t table = std::uint32_t{1} << arity;
  const std::uint32_t all = table - 1;

  std::vector<EnumConstraint> constraints;
  for (const auto& pr : fam.pairs()) {
    auto tuples = polymorphism_constraint_tuples(pr.p, arity, std::size_t{1} << 20);
    for (auto& t : tuples) constraints.push_back({std::move(t), &pr.q});
  }
  // Check each constraint exactly once: when its highest table entry is set.
  std::vector<std::vector<const EnumConstraint*>> by_last(table);
  for (const auto& c : constraints) {
    std::uint32_t last = 0;
    for (auto i : c.idx) last = std::max(last, i);
    by_last[last].push_back(&c);
  }

  std::vector<BoolFun> found;
  std::vector<std::uint8_t> val(table, 0);

  auto consistent_at = [&](std::uint32_t t) {
    for (const EnumConstraint* c : by_last[t]) {
      std::uint32_t out = 0;
      for (std::size_t i = 0; i < c->idx.size(); ++i)
        out |= std::uint32_t{val[c->idx[i]]} << i;
      if (!c->q->contains(out)) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::uint32_t t) -> void {
    if (t == table) {
      BoolFun f(arity);
      for (std::uint32_t i = 0; i < table; ++i) f.set_value(i, val[i]);
      found.push_back(std::move(f));
      return;
    }
    const std::uint32_t partner = ~t & all;
    int forced = -1;
    auto force = [&](int v) { forced = (forced == -1 || forced == v) ? v : -2; };
    if (opt.folded_only && partner < t) force(val[partner] ^ 1);
    if (opt.idempotent_only) {
      if (t == 0) force(0);
      if (t == all) force(1);
    }
    if (forced == -2) return;
    for (int v = 0; v <= 1; ++v) {
      if (forced >= 0 && v != forced) continue;
      val[t] = static_cast<std::uint8_t>(v);
      if (consistent_at(t)) self(self, t + 1);
    }
  };
  dfs(dfs, 0);
  return found;
}

} // namespace pcsp
