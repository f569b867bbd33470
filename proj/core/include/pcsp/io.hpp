#pragma once

#include <string>

#include <json.hpp>

#include "pcsp/classify.hpp"
#include "pcsp/reductions.hpp"
#include "pcsp/solvers.hpp"

namespace pcsp::io {

using json = nlohmann::ordered_json;

// Family: {"relations":[{"name":..,"arity":k,"p":{"sym":[w..]}|{"tuples":[[bits]]},"q":..}]}
Family family_from_json(const json& j);
json family_to_json(const Family& fam);

// Instance: {"num_vars":n,"clauses":[{"rel":name,"vars":[indices]}]}
Instance instance_from_json(const json& j, const Family& fam);
json instance_to_json(const Instance& inst, const Family& fam);

// Label Cover: {"L":int,"R":int,"edges":[{"u":id,"v":id,"pi":[ints]}]}
LabelCover label_cover_from_json(const json& j);
json label_cover_to_json(const LabelCover& lc);

// Gadget: instance-shaped clause list plus "aux"; "rel":"EQUAL" merges.
Gadget gadget_from_json(const json& j, const Family& fam);
json gadget_to_json(const Gadget& g, const Family& fam);

// Single promise relation entry (same shape as a family relation entry).
PromiseRelation promise_relation_from_json(const json& j);
json promise_relation_to_json(const PromiseRelation& pr, const std::string& name);

json relation_to_json(const Relation& r);

json classification_to_json(const Classification& c);
json verdict_to_json(const Verdict& v);

json assignment_to_json(const Assignment& a);

json load_json_file(const std::string& path);

} // namespace pcsp::io
