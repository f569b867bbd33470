#pragma once

#include <optional>
#include <vector>

#include "pcsp/bitvec.hpp"

namespace pcsp {

struct F2Equation {
  std::vector<int> support; // variable indices; repeats cancel
  int parity = 0;           // 0 or 1
};

struct F2System {
  int num_vars = 0;
  std::vector<F2Equation> equations;

  explicit F2System(int n = 0) : num_vars(n) {}
  void add(std::vector<int> support, int parity);
};

// One solution (free variables zero), or nullopt when elimination derives
// the contradiction row 0 = 1.
std::optional<std::vector<std::uint8_t>> gauss_f2(const F2System& s);

} // namespace pcsp
