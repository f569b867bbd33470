#include "pcsp/io.hpp"

#include <fstream>

namespace pcsp::io {

namespace {

Relation relation_from_entry(const json& j, int arity, const std::string& where) {
  if (j.contains("sym")) {
    WeightSet s = 0;
    for (const auto& w : j.at("sym")) {
      const int wi = w.get<int>();
      if (wi < 0 || wi > arity)
        fail(Errc::SchemaError, where + ": weight " + std::to_string(wi) + " outside {0.." +
                                    std::to_string(arity) + "}");
      s |= WeightSet{1} << wi;
    }
    return make_ham(arity, s);
  }
  if (j.contains("tuples")) {
    Relation r(arity);
    for (const auto& t : j.at("tuples")) {
      if (static_cast<int>(t.size()) != arity)
        fail(Errc::SchemaError, where + ": tuple length does not match the arity");
      std::uint32_t idx = 0;
      for (int i = 0; i < arity; ++i) {
        const int b = t[i].get<int>();
        if (b != 0 && b != 1) fail(Errc::SchemaError, where + ": tuple entries must be 0 or 1");
        idx |= std::uint32_t{static_cast<std::uint32_t>(b)} << i;
      }
      r.insert(idx);
    }
    return r;
  }
  fail(Errc::SchemaError, where + ": relation needs a \"sym\" or \"tuples\" field");
}

json relation_entry(const Relation& r) {
  json out;
  if (auto prof = symmetric_profile(r)) {
    out["sym"] = weight_set_values(prof->weights);
    return out;
  }
  json tuples = json::array();
  for (auto m : r.members()) {
    json t = json::array();
    for (int i = 0; i < r.arity(); ++i) t.push_back(static_cast<int>((m >> i) & 1));
    tuples.push_back(std::move(t));
  }
  out["tuples"] = std::move(tuples);
  return out;
}

} // namespace

PromiseRelation promise_relation_from_json(const json& j) {
  const int arity = j.at("arity").get<int>();
  const std::string name = j.value("name", "?");
  try {
    return {relation_from_entry(j.at("p"), arity, name + ".p"),
            relation_from_entry(j.at("q"), arity, name + ".q")};
  } catch (const Error& e) {
    if (e.code() == Errc::PromiseViolation)
      fail(Errc::PromiseViolation, "relation '" + name + "': P is not contained in Q");
    throw;
  }
}

json promise_relation_to_json(const PromiseRelation& pr, const std::string& name) {
  json out;
  out["name"] = name;
  out["arity"] = pr.arity();
  out["p"] = relation_entry(pr.p);
  out["q"] = relation_entry(pr.q);
  return out;
}

Family family_from_json(const json& j) {
  if (!j.contains("relations") || !j.at("relations").is_array() || j.at("relations").empty())
    fail(Errc::SchemaError, "family needs a nonempty \"relations\" array");
  std::vector<PromiseRelation> rels;
  std::vector<std::string> names;
  for (const auto& entry : j.at("relations")) {
    rels.push_back(promise_relation_from_json(entry));
    names.push_back(entry.value("name", "r" + std::to_string(names.size())));
  }
  return make_family(std::move(rels), std::move(names));
}

json family_to_json(const Family& fam) {
  json rels = json::array();
  for (std::size_t i = 0; i < fam.size(); ++i)
    rels.push_back(promise_relation_to_json(fam.pair(i), fam.name(i)));
  json out;
  out["relations"] = std::move(rels);
  return out;
}

Instance instance_from_json(const json& j, const Family& fam) {
  Instance inst;
  inst.num_vars = j.at("num_vars").get<int>();
  if (inst.num_vars < 0) fail(Errc::SchemaError, "num_vars must be nonnegative");
  int ci = 0;
  for (const auto& entry : j.at("clauses")) {
    Clause c;
    const std::string rel_name = entry.at("rel").get<std::string>();
    c.rel = fam.index_of(rel_name);
    if (c.rel < 0)
      fail(Errc::SchemaError,
           "clause " + std::to_string(ci) + " references unknown relation '" + rel_name + "'");
    for (const auto& v : entry.at("vars")) c.vars.push_back(v.get<int>());
    if (static_cast<int>(c.vars.size()) != fam.pair(c.rel).arity())
      fail(Errc::SchemaError, "clause " + std::to_string(ci) + " has " +
                                  std::to_string(c.vars.size()) + " variables, '" + rel_name +
                                  "' has arity " + std::to_string(fam.pair(c.rel).arity()));
    for (int v : c.vars)
      if (v < 0 || v >= inst.num_vars)
        fail(Errc::SchemaError,
             "clause " + std::to_string(ci) + " uses variable " + std::to_string(v) +
                 " outside [0, " + std::to_string(inst.num_vars) + ")");
    inst.clauses.push_back(std::move(c));
    ++ci;
  }
  return inst;
}

json instance_to_json(const Instance& inst, const Family& fam) {
  json out;
  out["num_vars"] = inst.num_vars;
  json clauses = json::array();
  for (const Clause& c : inst.clauses) {
    json e;
    e["rel"] = fam.name(c.rel);
    e["vars"] = c.vars;
    clauses.push_back(std::move(e));
  }
  out["clauses"] = std::move(clauses);
  return out;
}

LabelCover label_cover_from_json(const json& j) {
  LabelCover lc;
  lc.left_labels = j.at("L").get<int>();
  lc.right_labels = j.at("R").get<int>();
  lc.eta = j.value("eta", 0.0);
  for (const auto& e : j.at("edges")) {
    LabelCoverEdge edge;
    edge.u = e.at("u").get<int>();
    edge.v = e.at("v").get<int>();
    for (const auto& t : e.at("pi")) edge.pi.push_back(t.get<int>());
    lc.edges.push_back(std::move(edge));
  }
  validate_label_cover(lc);
  return lc;
}

json label_cover_to_json(const LabelCover& lc) {
  json out;
  out["L"] = lc.left_labels;
  out["R"] = lc.right_labels;
  if (lc.eta != 0.0) out["eta"] = lc.eta;
  json edges = json::array();
  for (const auto& e : lc.edges) {
    json je;
    je["u"] = e.u;
    je["v"] = e.v;
    je["pi"] = e.pi;
    edges.push_back(std::move(je));
  }
  out["edges"] = std::move(edges);
  return out;
}

Gadget gadget_from_json(const json& j, const Family& fam) {
  Gadget g;
  g.target_arity = j.at("target_arity").get<int>();
  g.aux_count = j.at("aux").get<int>();
  for (const auto& entry : j.at("clauses")) {
    GadgetClause gc;
    const std::string rel_name = entry.at("rel").get<std::string>();
    if (rel_name == "EQUAL")
      gc.rel = -1;
    else {
      gc.rel = fam.index_of(rel_name);
      if (gc.rel < 0) fail(Errc::SchemaError, "gadget references unknown relation '" + rel_name + "'");
    }
    for (const auto& v : entry.at("vars")) gc.vars.push_back(v.get<int>());
    g.clauses.push_back(std::move(gc));
  }
  return g;
}

json gadget_to_json(const Gadget& g, const Family& fam) {
  json out;
  out["target_arity"] = g.target_arity;
  out["aux"] = g.aux_count;
  json clauses = json::array();
  for (const auto& gc : g.clauses) {
    json e;
    e["rel"] = gc.is_equal() ? "EQUAL" : fam.name(gc.rel);
    e["vars"] = gc.vars;
    clauses.push_back(std::move(e));
  }
  out["clauses"] = std::move(clauses);
  return out;
}

json relation_to_json(const Relation& r) {
  json out = relation_entry(r);
  out["arity"] = r.arity();
  return out;
}

json classification_to_json(const Classification& c) {
  json out;
  switch (c.tag) {
    case Classification::Tag::Tractable: out["verdict"] = "tractable"; break;
    case Classification::Tag::NPHard: out["verdict"] = "np-hard"; break;
    case Classification::Tag::OutOfScope: out["verdict"] = "out-of-scope"; break;
  }
  if (c.kind) out["kind"] = family_kind_name(*c.kind);
  if (!c.reason.empty()) out["reason"] = c.reason;
  out["trace"] = c.trace;
  return out;
}

json verdict_to_json(const Verdict& v) {
  json out;
  out["verdict"] = v.answer == Answer::Yes ? "yes" : "no";
  if (v.witness) out["witness"] = assignment_to_json(*v.witness);
  out["engine"] = v.engine;
  return out;
}

json assignment_to_json(const Assignment& a) {
  json bits = json::array();
  for (int i = 0; i < a.size(); ++i) bits.push_back(a[i] ? 1 : 0);
  return bits;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
}

} // namespace pcsp::io
