#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcsp/bitvec.hpp"
#include "pcsp/errors.hpp"

namespace pcsp {

// Arity cap keeping characteristic sets at machine-word scale. Configuration,
// not a structural constant: everything below takes the arity at face value
// up to this bound.
inline constexpr int kMaxRelationArity = 16;

// Set of Hamming weights {0..k}, stored as a bitmask (bit w = weight w).
using WeightSet = std::uint32_t;

WeightSet weight_set(std::initializer_list<int> weights);
WeightSet weight_set_range(int lo, int hi); // {lo..hi}, empty if lo > hi
std::vector<int> weight_set_values(WeightSet s);
inline bool weight_in(WeightSet s, int w) { return w >= 0 && ((s >> w) & 1); }
inline WeightSet weight_set_full(int k) { return (WeightSet{2} << k) - 1; } // {0..k}
int weight_set_min(WeightSet s);
int weight_set_max(WeightSet s);

struct SymmetricProfile {
  int arity = 0;
  WeightSet weights = 0;

  friend bool operator==(const SymmetricProfile&, const SymmetricProfile&) = default;
};

// Boolean relation of arity k as a characteristic set over tuple indices
// 0..2^k-1. Coordinate 1 of a tuple is the lowest-order bit of its index;
// this encoding is fixed across the whole repo.
class Relation {
public:
  Relation() : Relation(1) {}
  explicit Relation(int arity);
  Relation(int arity, const std::vector<std::uint32_t>& tuples);

  int arity() const { return arity_; }
  std::uint32_t tuple_count() const { return std::uint32_t{1} << arity_; }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(std::uint32_t tuple) const { return bits_.test(tuple); }
  void insert(std::uint32_t tuple);

  std::vector<std::uint32_t> members() const { return bits_.ones(); }
  const BitVec& bits() const { return bits_; }

  bool is_subset_of(const Relation& o) const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.arity_ == b.arity_ && a.bits_ == b.bits_;
  }

private:
  int arity_;
  BitVec bits_;
};

// Ham_k(S): tuples whose Hamming weight lies in S.
Relation make_ham(int k, WeightSet s);

// (k, S) with r = Ham_k(S), or nullopt when r is not symmetric.
std::optional<SymmetricProfile> symmetric_profile(const Relation& r);

// Members XORed with the indicator of the coordinate set (bit i-1 = coordinate i).
Relation flip(const Relation& r, std::uint32_t coords);
inline Relation flip_all(const Relation& r) {
  return flip(r, (std::uint32_t{1} << r.arity()) - 1);
}

} // namespace pcsp
