#pragma once

#include <optional>
#include <string>

#include "pcsp/io.hpp"

namespace pcsp::cli {

// Exit code contract: 0 = yes / tractable / ok, 1 = no / np-hard,
// 2 = gap / out of scope / unknown, 64 = usage, 65 = data error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitGap = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;

enum class Op {
  Classify,
  Solve,
  PolyCheck,
  PolyClosure,
  PolyEnumerate,
  CFix,
  GadgetLabelCover,
  ReduceNoRep,
  ReducePpp,
  ReduceGalois,
  OracleStatus,
};

struct Command {
  Op op = Op::Classify;
  std::string family_path;
  std::string instance_path;
  std::string label_cover_path;
  std::string gadget_path;
  std::string target_path;
  std::string fun_hex;        // poly check
  std::string kind;           // poly closure: par | maj | at
  std::string relation;       // poly closure: relation name, default first
  int arity = 3;              // poly check/enumerate
  int l_max = 3;              // cfix / brute closure
  bool brute = false;         // poly closure: brute-force union instead of closed form
  bool folded = false;        // poly enumerate filter
  bool idempotent = false;    // poly enumerate filter
  bool witness = false;       // solve: construct a witness
  int max_vars = 20;          // oracle cap (PCSP_MAX_VARS)
  int enum_arity = 4;         // enumeration cap (PCSP_ENUM_ARITY)
};

struct RunResult {
  int exit_code = kExitGap;
  io::json report;
};

// Executes one command; every failure is mapped to an exit code and a
// machine-readable report, never a raw crash.
RunResult run(const Command& cmd);

// Rendered report with the timing field last; deterministic otherwise.
std::string report_to_string(const RunResult& r);

} // namespace pcsp::cli
