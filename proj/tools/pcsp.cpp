#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "pcsp/runner.hpp"

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stoi(v);
  } catch (...) {
    return fallback;
  }
}

} // namespace

int main(int argc, char** argv) {
  using pcsp::cli::Command;
  using pcsp::cli::Op;

  CLI::App app{"symmetric Boolean promise-CSP toolkit"};
  app.require_subcommand(1);

  Command cmd;
  cmd.max_vars = env_int("PCSP_MAX_VARS", 20);
  cmd.enum_arity = env_int("PCSP_ENUM_ARITY", 4);
  bool parsed = false;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("-f,--family", cmd.family_path, "family JSON file")->required();
  };
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("-i,--instance", cmd.instance_path, "instance JSON file")->required();
  };
  auto arm = [&](CLI::App* sub, Op op) {
    sub->callback([&, op] {
      cmd.op = op;
      parsed = true;
    });
  };

  auto* classify = app.add_subcommand("classify", "tractable / NP-hard dichotomy decision");
  add_family(classify);
  arm(classify, Op::Classify);

  auto* solve = app.add_subcommand("solve", "decide a promise instance");
  add_family(solve);
  add_instance(solve);
  solve->add_flag("--witness", cmd.witness, "construct a Q-side witness when YES");
  arm(solve, Op::Solve);

  auto* poly = app.add_subcommand("poly", "weak polymorphism queries");
  poly->require_subcommand(1);

  auto* pcheck = poly->add_subcommand("check", "check one function against the family");
  add_family(pcheck);
  pcheck->add_option("--fun", cmd.fun_hex, "truth table as hex, low input index first")
      ->required();
  pcheck->add_option("--arity", cmd.arity, "function arity")->required();
  arm(pcheck, Op::PolyCheck);

  auto* pclosure = poly->add_subcommand("closure", "closure of a relation's P side");
  add_family(pclosure);
  pclosure->add_option("--kind", cmd.kind, "par | maj | at")->required();
  pclosure->add_option("--rel", cmd.relation, "relation name (default: first)");
  pclosure->add_flag("--brute", cmd.brute, "union of images up to --lmax instead of closed form");
  pclosure->add_option("--lmax", cmd.l_max, "arity bound for --brute");
  arm(pclosure, Op::PolyClosure);

  auto* penum = poly->add_subcommand("enumerate", "enumerate weak polymorphisms of one arity");
  add_family(penum);
  penum->add_option("--arity", cmd.arity, "function arity")->required();
  penum->add_flag("--folded", cmd.folded, "folded functions only");
  penum->add_flag("--idempotent", cmd.idempotent, "idempotent functions only");
  arm(penum, Op::PolyEnumerate);

  auto* pcfix = poly->add_subcommand("cfix", "C-fixing scan of an NP-hard family");
  add_family(pcfix);
  pcfix->add_option("--lmax", cmd.l_max, "enumerate arities up to this bound")->required();
  arm(pcfix, Op::CFix);

  auto* gadget = app.add_subcommand("gadget", "hardness gadgets");
  gadget->require_subcommand(1);
  auto* glc = gadget->add_subcommand("labelcover", "long-code gadget from a label cover game");
  add_family(glc);
  glc->add_option("-g,--game", cmd.label_cover_path, "label cover JSON file")->required();
  arm(glc, Op::GadgetLabelCover);

  auto* reduce = app.add_subcommand("reduce", "instance and family transformations");
  reduce->require_subcommand(1);

  auto* rnorep = reduce->add_subcommand("norep", "repetition-free expansion");
  add_family(rnorep);
  add_instance(rnorep);
  arm(rnorep, Op::ReduceNoRep);

  auto* rppp = reduce->add_subcommand("ppp", "apply a ppp-definition gadget");
  add_family(rppp);
  add_instance(rppp);
  rppp->add_option("-g,--gadget", cmd.gadget_path, "gadget JSON file")->required();
  arm(rppp, Op::ReducePpp);

  auto* rgalois = reduce->add_subcommand("galois", "Galois-correspondence gadget for a target");
  add_family(rgalois);
  rgalois->add_option("-t,--target", cmd.target_path, "target promise relation JSON file")
      ->required();
  arm(rgalois, Op::ReduceGalois);

  auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth");
  oracle->require_subcommand(1);
  auto* ostatus = oracle->add_subcommand("status", "p-sat / q-unsat / gap status");
  add_family(ostatus);
  add_instance(ostatus);
  arm(ostatus, Op::OracleStatus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : pcsp::cli::kExitUsage;
  }
  if (!parsed) return pcsp::cli::kExitUsage;

  const pcsp::cli::RunResult res = pcsp::cli::run(cmd);
  std::cout << pcsp::cli::report_to_string(res) << "\n";
  return res.exit_code;
}
