#pragma once

#include "pcsp/instance.hpp"

namespace pcsp {

enum class Status { PSat, QUnsat, Gap };

const char* status_name(Status s);

// Exhaustive ground truth for the promise decision problem. PSat and QUnsat
// are mutually exclusive because P is a subset of Q.
Status brute_force_status(const Family& fam, const Instance& inst, int max_vars = 20);

// The satisfying assignment found for the requested side, if any.
std::optional<Assignment> brute_force_solution(const Family& fam, const Instance& inst,
                                               Side side, int max_vars = 20);

} // namespace pcsp
