#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcsp/gf2.hpp"
#include "pcsp/rational.hpp"
#include "pcsp/relation.hpp"

namespace pcsp {

// F2 affine hull: offset member plus a basis of the span of r xor offset.
// The hull's point set equals the parity closure of r.
struct F2AffineHull {
  std::uint32_t offset = 0;
  std::vector<std::uint32_t> basis;
};

F2AffineHull affine_hull_f2(const Relation& r);

// Point set of the hull (2^rank tuples).
Relation f2_hull_points(int arity, const F2AffineHull& h);

// Integer affine hull: a minimal system of integer equations a*x = c whose
// rational solution set is the affine hull of the members of r.
struct IntAffineEquation {
  std::vector<Integer> coeffs; // length = arity
  Integer rhs;
};

std::vector<IntAffineEquation> affine_hull_z(const Relation& r);

// One integer solution of A x = b, or nullopt (diagonalization over Z with
// unimodular row/column operations). Free coordinates are set to zero.
std::optional<std::vector<Integer>> solve_integer_linear(std::vector<std::vector<Integer>> a,
                                                         std::vector<Integer> b);

} // namespace pcsp
