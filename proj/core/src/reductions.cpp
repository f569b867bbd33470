#include "pcsp/reductions.hpp"

#include <algorithm>
#include <numeric>

namespace pcsp {

namespace {

// Disjoint-set forest with deterministic smallest-root compression.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
  // Compact class ids in first-seen order; returns (map, class count).
  std::pair<std::vector<int>, int> compress() {
    std::vector<int> id(parent.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) {
      const int r = find(static_cast<int>(i));
      if (id[r] < 0) id[r] = next++;
      id[i] = id[r];
    }
    return {id, next};
  }
};

} // namespace

Instance remove_repetition(const Family& fam, const Instance& inst) {
  validate_instance(fam, inst);
  const int copies = 2 * fam.max_arity(); // |D| * k
  Instance out;
  out.num_vars = inst.num_vars * copies;
  for (const Clause& c : inst.clauses) {
    const int k = static_cast<int>(c.vars.size());
    std::vector<int> pick(k, 0);
    while (true) {
      bool distinct = true;
      for (int i = 0; i < k && distinct; ++i)
        for (int j = i + 1; j < k; ++j)
          if (c.vars[i] == c.vars[j] && pick[i] == pick[j]) {
            distinct = false;
            break;
          }
      if (distinct) {
        Clause nc;
        nc.rel = c.rel;
        nc.vars.resize(k);
        for (int i = 0; i < k; ++i) nc.vars[i] = c.vars[i] * copies + pick[i];
        out.clauses.push_back(std::move(nc));
      }
      int i = 0;
      while (i < k && ++pick[i] == copies) pick[i++] = 0;
      if (i == k) break;
    }
  }
  return out;
}

int LabelCover::num_left() const {
  int n = 0;
  for (const auto& e : edges) n = std::max(n, e.u + 1);
  return n;
}

int LabelCover::num_right() const {
  int n = 0;
  for (const auto& e : edges) n = std::max(n, e.v + 1);
  return n;
}

void validate_label_cover(const LabelCover& lc) {
  require(lc.left_labels >= 1 && lc.right_labels >= 1, Errc::SchemaError,
          "label sizes must be positive");
  for (const auto& e : lc.edges) {
    require(e.u >= 0 && e.v >= 0, Errc::SchemaError, "negative vertex id");
    require(static_cast<int>(e.pi.size()) == lc.right_labels, Errc::SchemaError,
            "projection must be total on the right label set");
    for (int t : e.pi)
      require(t >= 0 && t < lc.left_labels, Errc::SchemaError,
              "projection value outside the left label set");
  }
}

LongCodeGadget label_cover_gadget(const LabelCover& lc, const Family& fam, int max_table_bits) {
  validate_label_cover(lc);
  require(fam.contains_not(), Errc::NotFolded, "the gadget needs a folded family (NOT present)");
  require(lc.left_labels <= max_table_bits && lc.right_labels <= max_table_bits, Errc::TooLarge,
          "long-code tables beyond the cap");

  const int nu = lc.num_left(), nv = lc.num_right();
  const int lsize = 1 << lc.left_labels, rsize = 1 << lc.right_labels;
  const int total = nu * lsize + nv * rsize;
  auto left_raw = [&](int u, std::uint32_t x) { return u * lsize + static_cast<int>(x); };
  auto right_raw = [&](int v, std::uint32_t y) {
    return nu * lsize + v * rsize + static_cast<int>(y);
  };

  UnionFind uf(total);
  for (const auto& e : lc.edges) {
    for (std::uint32_t y = 0; y < static_cast<std::uint32_t>(rsize); ++y) {
      // x must agree with y through the projection; conflicting y have no x.
      std::uint32_t forced = 0, forced_mask = 0;
      bool ok = true;
      for (int i = 0; i < lc.right_labels && ok; ++i) {
        const std::uint32_t bit = (y >> i) & 1;
        const std::uint32_t m = std::uint32_t{1} << e.pi[i];
        if (forced_mask & m)
          ok = ((forced & m) != 0) == (bit != 0);
        else {
          forced_mask |= m;
          if (bit) forced |= m;
        }
      }
      if (!ok) continue;
      const std::uint32_t free_mask = ((std::uint32_t{1} << lc.left_labels) - 1) & ~forced_mask;
      // Every completion of the forced coordinates is merged with f_v(y).
      std::uint32_t sub = free_mask;
      while (true) {
        uf.unite(left_raw(e.u, forced | sub), right_raw(e.v, y));
        if (sub == 0) break;
        sub = (sub - 1) & free_mask;
      }
    }
  }

  auto [id, classes] = uf.compress();
  LongCodeGadget g;
  g.instance.num_vars = classes;
  g.left_var.assign(nu, std::vector<int>(lsize));
  g.right_var.assign(nv, std::vector<int>(rsize));
  for (int u = 0; u < nu; ++u)
    for (int x = 0; x < lsize; ++x) g.left_var[u][x] = id[left_raw(u, x)];
  for (int v = 0; v < nv; ++v)
    for (int y = 0; y < rsize; ++y) g.right_var[v][y] = id[right_raw(v, y)];

  auto emit_tables = [&](int count, int labels, auto&& var_of) {
    for (int vert = 0; vert < count; ++vert) {
      for (std::size_t ri = 0; ri < fam.size(); ++ri) {
        const auto tuples =
            polymorphism_constraint_tuples(fam.pair(ri).p, labels, std::size_t{1} << 20);
        for (const auto& idx : tuples) {
          Clause c;
          c.rel = static_cast<int>(ri);
          c.vars.reserve(idx.size());
          for (auto t : idx) c.vars.push_back(var_of(vert, t));
          g.instance.clauses.push_back(std::move(c));
        }
      }
    }
  };
  emit_tables(nu, lc.left_labels, [&](int u, std::uint32_t x) { return g.left_var[u][x]; });
  emit_tables(nv, lc.right_labels, [&](int v, std::uint32_t y) { return g.right_var[v][y]; });
  return g;
}

Assignment dictator_assignment(const LabelCover& lc, const LongCodeGadget& g,
                               const Labeling& labeling) {
  require(static_cast<int>(labeling.left.size()) >= lc.num_left() &&
              static_cast<int>(labeling.right.size()) >= lc.num_right(),
          Errc::SchemaError, "labeling does not cover every vertex");
  for (const auto& e : lc.edges)
    require(e.pi[labeling.right[e.v]] == labeling.left[e.u], Errc::UnsatisfiedEdge,
            "labeling violates an edge projection");

  std::vector<int> value(g.instance.num_vars, -1);
  auto put = [&](int var, int bit) {
    // Merged cells agree for any edge-satisfying labeling.
    require(value[var] < 0 || value[var] == bit, Errc::UnsatisfiedEdge,
            "dictator tables disagree on a merged variable");
    value[var] = bit;
  };
  for (int u = 0; u < lc.num_left(); ++u)
    for (std::size_t x = 0; x < g.left_var[u].size(); ++x)
      put(g.left_var[u][x], static_cast<int>((x >> labeling.left[u]) & 1));
  for (int v = 0; v < lc.num_right(); ++v)
    for (std::size_t y = 0; y < g.right_var[v].size(); ++y)
      put(g.right_var[v][y], static_cast<int>((y >> labeling.right[v]) & 1));

  Assignment a;
  a.bits.resize(g.instance.num_vars);
  for (int i = 0; i < g.instance.num_vars; ++i) a.bits[i] = value[i] == 1 ? 1 : 0;
  return a;
}

DecodeResult decode_labeling(const LabelCover& lc, const LongCodeGadget& g, const Assignment& a,
                             int c_max) {
  require(a.size() == g.instance.num_vars, Errc::LengthMismatch,
          "assignment does not match the gadget");

  auto table_of = [&](const std::vector<int>& vars, int arity) {
    BoolFun f(arity);
    for (std::size_t x = 0; x < vars.size(); ++x) f.set_value(static_cast<std::uint32_t>(x), a[vars[x]]);
    return f;
  };
  auto fixing_of = [&](const BoolFun& f, const char* side, int vert) {
    auto fix = is_c_fixing(f, c_max);
    require(fix.has_value(), Errc::NoFixingSet,
            std::string(side) + " table " + std::to_string(vert) + " has no fixing set of size <= " +
                std::to_string(c_max));
    return *fix;
  };

  const int nu = lc.num_left(), nv = lc.num_right();
  std::vector<std::vector<int>> cand_left(nu), cand_right(nv);
  for (int u = 0; u < nu; ++u)
    cand_left[u] = fixing_of(table_of(g.left_var[u], lc.left_labels), "left", u);
  for (int v = 0; v < nv; ++v)
    cand_right[v] = fixing_of(table_of(g.right_var[v], lc.right_labels), "right", v);

  // Deterministic derandomization: best edge agreement over fixing-set
  // members, first maximum in lexicographic candidate order.
  std::size_t combos = 1;
  for (const auto& c : cand_left) combos *= c.size();
  for (const auto& c : cand_right) combos *= c.size();
  require(combos <= (std::size_t{1} << 20), Errc::TooLarge, "candidate product beyond the cap");

  DecodeResult best;
  best.total_edges = static_cast<int>(lc.edges.size());
  best.satisfied_edges = -1;
  std::vector<std::size_t> pick(nu + nv, 0);
  while (true) {
    Labeling lab;
    lab.left.resize(nu);
    lab.right.resize(nv);
    for (int u = 0; u < nu; ++u) lab.left[u] = cand_left[u][pick[u]];
    for (int v = 0; v < nv; ++v) lab.right[v] = cand_right[v][pick[nu + v]];
    int sat = 0;
    for (const auto& e : lc.edges)
      if (e.pi[lab.right[e.v]] == lab.left[e.u]) ++sat;
    if (sat > best.satisfied_edges) {
      best.satisfied_edges = sat;
      best.labeling = std::move(lab);
    }
    int i = 0;
    while (i < nu + nv) {
      const std::size_t lim = i < nu ? cand_left[i].size() : cand_right[i - nu].size();
      if (++pick[i] < lim) break;
      pick[i++] = 0;
    }
    if (i == nu + nv) break;
  }
  return best;
}

Instance apply_ppp_gadget(const Gadget& g, const Family& base, const Instance& inst) {
  for (const Clause& c : inst.clauses)
    require(static_cast<int>(c.vars.size()) == g.target_arity, Errc::ArityMismatch,
            "instance clause arity does not match the gadget target");
  for (const GadgetClause& gc : g.clauses) {
    if (!gc.is_equal())
      require(gc.rel < static_cast<int>(base.size()), Errc::SchemaError,
              "gadget clause references an unknown base relation");
    for (int v : gc.vars)
      require(v >= 0 && v < g.target_arity + g.aux_count, Errc::SchemaError,
              "gadget clause variable out of range");
  }

  const int total = inst.num_vars + static_cast<int>(inst.clauses.size()) * g.aux_count;
  UnionFind uf(total);
  std::vector<Clause> raw;
  for (std::size_t ci = 0; ci < inst.clauses.size(); ++ci) {
    const Clause& c = inst.clauses[ci];
    const int aux_base = inst.num_vars + static_cast<int>(ci) * g.aux_count;
    auto map_var = [&](int w) {
      return w < g.target_arity ? c.vars[w] : aux_base + (w - g.target_arity);
    };
    for (const GadgetClause& gc : g.clauses) {
      if (gc.is_equal()) {
        require(gc.vars.size() == 2, Errc::SchemaError, "EQUAL takes two variables");
        uf.unite(map_var(gc.vars[0]), map_var(gc.vars[1]));
      } else {
        Clause nc;
        nc.rel = gc.rel;
        for (int w : gc.vars) nc.vars.push_back(map_var(w));
        raw.push_back(std::move(nc));
      }
    }
  }
  auto [id, classes] = uf.compress();
  Instance out;
  out.num_vars = classes;
  for (Clause& c : raw) {
    for (int& v : c.vars) v = id[v];
    out.clauses.push_back(std::move(c));
  }
  return out;
}

namespace {

bool gadget_clauses_hold(const Gadget& g, const Family& base, std::uint64_t assignment,
                         Side side) {
  for (const GadgetClause& gc : g.clauses) {
    if (gc.is_equal()) {
      if (((assignment >> gc.vars[0]) & 1) != ((assignment >> gc.vars[1]) & 1)) return false;
      continue;
    }
    std::uint32_t tuple = 0;
    for (std::size_t i = 0; i < gc.vars.size(); ++i)
      tuple |= static_cast<std::uint32_t>((assignment >> gc.vars[i]) & 1) << i;
    const PromiseRelation& pr = base.pair(gc.rel);
    if (!(side == Side::P ? pr.p : pr.q).contains(tuple)) return false;
  }
  return true;
}

} // namespace

bool gadget_defines(const Gadget& g, const Family& base, const PromiseRelation& target) {
  require(g.target_arity == target.arity(), Errc::ArityMismatch,
          "gadget arity does not match the target");
  const int k = g.target_arity, aux = g.aux_count;
  require(k + aux <= 24, Errc::TooLarge, "bullet check beyond the exhaustive cap");

  // Bullet 1: every P' member extends to a Psi_P-satisfying assignment.
  for (std::uint32_t x : target.p.members()) {
    bool found = false;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << aux) && !found; ++y)
      found = gadget_clauses_hold(g, base, x | (y << k), Side::P);
    if (!found) return false;
  }
  // Bullet 2: every Psi_Q-satisfying assignment projects into Q'.
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << (k + aux)); ++z) {
    if (!gadget_clauses_hold(g, base, z, Side::Q)) continue;
    if (!target.q.contains(static_cast<std::uint32_t>(z & ((std::uint32_t{1} << k) - 1))))
      return false;
  }
  return true;
}

Gadget galois_gadget(const Family& fam, const PromiseRelation& target, int max_aux) {
  const auto members = target.p.members();
  const int m = static_cast<int>(members.size());
  require(m >= 1, Errc::EmptyRelation, "the Galois gadget needs a nonempty target P");
  require((std::size_t{1} << m) <= static_cast<std::size_t>(max_aux), Errc::TooLarge,
          "2^|P| auxiliaries beyond the cap");

  // Hypothesis of the correspondence: weak polymorphisms carry over at every
  // arity up to m.
  EnumOptions opt;
  opt.max_arity_cap = m;
  for (int l = 1; l <= m; ++l) {
    for (const BoolFun& f : enumerate_weak_polymorphisms(fam, l, opt))
      require(is_weak_polymorphism(f, target), Errc::HypothesisFails,
              "a weak polymorphism of the family (arity " + std::to_string(l) +
                  ") is not one of the target");
  }

  const int k = target.arity();
  Gadget g;
  g.target_arity = k;
  g.aux_count = 1 << m;
  // Coordinate i of the target reads the table at the column of coordinate i
  // across the enumeration of P'.
  for (int i = 0; i < k; ++i) {
    std::uint32_t idx = 0;
    for (int j = 0; j < m; ++j) idx |= ((members[j] >> i) & 1) << j;
    g.clauses.push_back({-1, {i, k + static_cast<int>(idx)}});
  }
  for (std::size_t ri = 0; ri < fam.size(); ++ri) {
    const auto tuples =
        polymorphism_constraint_tuples(fam.pair(ri).p, m, std::size_t{1} << 20);
    for (const auto& idx : tuples) {
      GadgetClause gc;
      gc.rel = static_cast<int>(ri);
      for (auto t : idx) gc.vars.push_back(k + static_cast<int>(t));
      g.clauses.push_back(std::move(gc));
    }
  }
  require(gadget_defines(g, fam, target), Errc::Internal,
          "constructed gadget fails the ppp bullets");
  return g;
}

ClosureCheckResult family_closure_checks(const FunFamily& f, int r_max) {
  ClosureCheckResult out;
  for (const auto& fn : f.members)
    require(fn.arity() <= f.arity_bound, Errc::ArityMismatch,
            "family member above the declared arity bound");

  auto is_member = [&](const BoolFun& g) {
    return std::find(f.members.begin(), f.members.end(), g) != f.members.end();
  };

  // Projections pi : [L] -> [R] for every R up to the bound.
  for (const auto& fn : f.members) {
    const int l = fn.arity();
    for (int r = 1; r <= r_max && out.projection_closed; ++r) {
      std::vector<int> pi(l, 0);
      while (true) {
        BoolFun g = project(fn, pi, r);
        if (!is_member(g)) {
          out.projection_closed = false;
          std::string desc = "projection of " + fun_to_hex(fn) + "@" + std::to_string(l) + " via [";
          for (int i = 0; i < l; ++i) desc += (i ? "," : "") + std::to_string(pi[i]);
          out.witness = desc + "] to arity " + std::to_string(r) + " is missing";
          break;
        }
        int i = 0;
        while (i < l && ++pi[i] == r) pi[i++] = 0;
        if (i == l) break;
      }
    }
    if (!out.projection_closed) break;
  }
  if (!out.projection_closed) {
    out.clone = false;
    return out;
  }

  // Clone: compositions f(g_1, ..., g_{L1}) on disjoint blocks, up to the bound.
  std::vector<int> arities;
  for (const auto& fn : f.members)
    if (std::find(arities.begin(), arities.end(), fn.arity()) == arities.end())
      arities.push_back(fn.arity());
  for (const auto& outer : f.members) {
    const int l1 = outer.arity();
    for (int l2 : arities) {
      if (l1 * l2 > r_max) continue;
      // All choices of inner functions of arity l2.
      std::vector<const BoolFun*> inner_pool;
      for (const auto& cand : f.members)
        if (cand.arity() == l2) inner_pool.push_back(&cand);
      std::vector<std::size_t> pick(l1, 0);
      bool done = false;
      while (!done && out.clone) {
        BoolFun h(l1 * l2);
        for (std::uint32_t x = 0; x < h.table_size(); ++x) {
          std::uint32_t args = 0;
          for (int b = 0; b < l1; ++b) {
            const std::uint32_t block = (x >> (b * l2)) & ((std::uint32_t{1} << l2) - 1);
            args |= std::uint32_t{inner_pool[pick[b]]->value(block)} << b;
          }
          h.set_value(x, outer.value(args));
        }
        if (!is_member(h)) {
          out.clone = false;
          out.witness = "composition of " + fun_to_hex(outer) + "@" + std::to_string(l1) +
                        " with arity-" + std::to_string(l2) + " members is missing";
        }
        int i = 0;
        while (i < l1 && ++pick[i] == inner_pool.size()) pick[i++] = 0;
        if (i == l1) done = true;
      }
      if (!out.clone) break;
    }
    if (!out.clone) break;
  }
  return out;
}

PromiseRelation construct_gamma_from_family(const FunFamily& f, int r) {
  require(r >= 1 && (1 << r) <= kMaxRelationArity, Errc::TooLarge,
          "finitized arity beyond the relation cap");
  const BoolFun identity = make_dictator(1, 0);
  require(std::find(f.members.begin(), f.members.end(), identity) != f.members.end(),
          Errc::MissingIdentity, "the family must contain the identity");
  const ClosureCheckResult chk = family_closure_checks(f, r);
  require(chk.projection_closed, Errc::NotProjectionClosed, chk.witness);

  const int arity = 1 << r;
  Relation p(arity), q(arity);
  for (int j = 0; j < r; ++j) {
    std::uint32_t tuple = 0;
    for (int i = 0; i < arity; ++i)
      if ((i >> j) & 1) tuple |= std::uint32_t{1} << i;
    p.insert(tuple);
  }
  for (const auto& fn : f.members) {
    if (fn.arity() != r) continue;
    std::uint32_t tuple = 0;
    for (int i = 0; i < arity; ++i)
      if (fn.value(static_cast<std::uint32_t>(i))) tuple |= std::uint32_t{1} << i;
    q.insert(tuple);
  }
  return {std::move(p), std::move(q)};
}

} // namespace pcsp
