#include "pcsp/runner.hpp"

#include <chrono>

namespace pcsp::cli {

namespace {

using io::json;

Family need_family(const Command& cmd) {
  require(!cmd.family_path.empty(), Errc::SchemaError, "a family file is required (-f)");
  return io::family_from_json(io::load_json_file(cmd.family_path));
}

Instance need_instance(const Command& cmd, const Family& fam) {
  require(!cmd.instance_path.empty(), Errc::SchemaError, "an instance file is required (-i)");
  return io::instance_from_json(io::load_json_file(cmd.instance_path), fam);
}

int run_op(const Command& cmd, RunResult& out) {
  switch (cmd.op) {
    case Op::Classify: {
      const Family fam = need_family(cmd);
      const Classification c = classify(fam);
      out.report = io::classification_to_json(c);
      if (c.tractable()) return kExitYes;
      return c.np_hard() ? kExitNo : kExitGap;
    }
    case Op::Solve: {
      const Family fam = need_family(cmd);
      const Instance inst = need_instance(cmd, fam);
      Verdict v = solve(fam, inst);
      if (cmd.witness && v.yes() && !v.witness) {
        for (FamilyKind k : {FamilyKind::Maj, FamilyKind::At})
          if (fam.all_symmetric() && has_family(fam, k)) {
            v.witness = construct_solution(fam, inst, k);
            break;
          }
      }
      if (!cmd.witness) v.witness.reset();
      out.report = io::verdict_to_json(v);
      return v.yes() ? kExitYes : kExitNo;
    }
    case Op::PolyCheck: {
      const Family fam = need_family(cmd);
      const BoolFun f = fun_from_hex(cmd.arity, cmd.fun_hex);
      out.report["function"] = fun_to_hex(f);
      out.report["arity"] = f.arity();
      json results = json::array();
      bool all_ok = true;
      for (std::size_t i = 0; i < fam.size(); ++i) {
        json entry;
        entry["relation"] = fam.name(i);
        const auto cex = weak_poly_counterexample(f, fam.pair(i));
        entry["ok"] = !cex.has_value();
        if (cex) {
          all_ok = false;
          json sel = json::array();
          for (auto t : *cex) {
            json tup = json::array();
            for (int b = 0; b < fam.pair(i).arity(); ++b) tup.push_back(int((t >> b) & 1));
            sel.push_back(std::move(tup));
          }
          entry["counterexample"] = std::move(sel);
        }
        results.push_back(std::move(entry));
      }
      out.report["ok"] = all_ok;
      out.report["results"] = std::move(results);
      return all_ok ? kExitYes : kExitNo;
    }
    case Op::PolyClosure: {
      const Family fam = need_family(cmd);
      int idx = cmd.relation.empty() ? 0 : fam.index_of(cmd.relation);
      require(idx >= 0, Errc::SchemaError, "unknown relation '" + cmd.relation + "'");
      const auto kind = family_kind_from_name(cmd.kind);
      require(kind.has_value(), Errc::SchemaError, "unknown kind '" + cmd.kind + "'");
      const Relation& p = fam.pair(idx).p;
      Relation closed(p.arity());
      if (cmd.brute)
        closed = brute_force_closure(p, *kind, cmd.l_max | 1);
      else if (*kind == FamilyKind::Par)
        closed = closure_parity(p);
      else {
        const auto prof = symmetric_profile(p);
        require(prof.has_value(), Errc::UnsupportedNonSymmetric,
                "closed form needs a symmetric relation");
        closed = make_ham(p.arity(), closure_symmetric(*kind, *prof).weights);
      }
      out.report["relation"] = fam.name(idx);
      out.report["kind"] = cmd.kind;
      out.report["closure"] = io::relation_to_json(closed);
      return kExitYes;
    }
    case Op::PolyEnumerate: {
      const Family fam = need_family(cmd);
      EnumOptions opt;
      opt.folded_only = cmd.folded;
      opt.idempotent_only = cmd.idempotent;
      opt.max_arity_cap = cmd.enum_arity;
      const auto funs = enumerate_weak_polymorphisms(fam, cmd.arity, opt);
      json list = json::array();
      for (const auto& f : funs) list.push_back(fun_to_hex(f));
      out.report["arity"] = cmd.arity;
      out.report["count"] = funs.size();
      out.report["functions"] = std::move(list);
      return kExitYes;
    }
    case Op::CFix: {
      const Family fam = need_family(cmd);
      const CFixingScan scan = c_fixing_scan(fam, cmd.l_max);
      out.report["c"] = scan.c;
      out.report["functions"] = scan.functions;
      out.report["max_arity"] = scan.max_arity;
      return kExitYes;
    }
    case Op::GadgetLabelCover: {
      const Family fam = need_family(cmd);
      require(!cmd.label_cover_path.empty(), Errc::SchemaError, "a label cover file is required (-g)");
      const LabelCover lc = io::label_cover_from_json(io::load_json_file(cmd.label_cover_path));
      const LongCodeGadget g = label_cover_gadget(lc, fam);
      out.report["instance"] = io::instance_to_json(g.instance, fam);
      out.report["left_tables"] = g.left_var;
      out.report["right_tables"] = g.right_var;
      return kExitYes;
    }
    case Op::ReduceNoRep: {
      const Family fam = need_family(cmd);
      const Instance inst = need_instance(cmd, fam);
      out.report["instance"] = io::instance_to_json(remove_repetition(fam, inst), fam);
      return kExitYes;
    }
    case Op::ReducePpp: {
      const Family fam = need_family(cmd);
      const Instance inst = need_instance(cmd, fam);
      require(!cmd.gadget_path.empty(), Errc::SchemaError, "a gadget file is required (-g)");
      const Gadget g = io::gadget_from_json(io::load_json_file(cmd.gadget_path), fam);
      out.report["instance"] = io::instance_to_json(apply_ppp_gadget(g, fam, inst), fam);
      return kExitYes;
    }
    case Op::ReduceGalois: {
      const Family fam = need_family(cmd);
      require(!cmd.target_path.empty(), Errc::SchemaError, "a target file is required (-t)");
      const PromiseRelation target =
          io::promise_relation_from_json(io::load_json_file(cmd.target_path));
      const Gadget g = galois_gadget(fam, target);
      out.report["gadget"] = io::gadget_to_json(g, fam);
      return kExitYes;
    }
    case Op::OracleStatus: {
      const Family fam = need_family(cmd);
      const Instance inst = need_instance(cmd, fam);
      const Status s = brute_force_status(fam, inst, cmd.max_vars);
      out.report["status"] = status_name(s);
      switch (s) {
        case Status::PSat: return kExitYes;
        case Status::QUnsat: return kExitNo;
        case Status::Gap: return kExitGap;
      }
      return kExitGap;
    }
  }
  fail(Errc::SchemaError, "unknown command");
}

} // namespace

RunResult run(const Command& cmd) {
  const auto start = std::chrono::steady_clock::now();
  RunResult out;
  try {
    out.exit_code = run_op(cmd, out);
  } catch (const Error& e) {
    out.report["error"] = e.what();
    switch (e.code()) {
      case Errc::OutOfScope:
      case Errc::NotTractable:
        out.exit_code = kExitGap;
        break;
      default:
        out.exit_code = kExitData;
        break;
    }
  } catch (const std::exception& e) {
    out.report["error"] = e.what();
    out.exit_code = kExitData;
  }
  const auto stop = std::chrono::steady_clock::now();
  out.report["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return out;
}

std::string report_to_string(const RunResult& r) { return r.report.dump(2); }

} // namespace pcsp::cli
