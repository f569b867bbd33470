#include "pcsp/relation.hpp"

#include <bit>

namespace pcsp {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::PromiseViolation: return "PromiseViolation";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::EvenArity: return "EvenArity";
    case Errc::EmptyRelation: return "EmptyRelation";
    case Errc::EmptyWeights: return "EmptyWeights";
    case Errc::UnsupportedNonSymmetric: return "UnsupportedNonSymmetric";
    case Errc::NotFolded: return "NotFolded";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::FamilyPresent: return "FamilyPresent";
    case Errc::OutOfScope: return "OutOfScope";
    case Errc::NotHard: return "NotHard";
    case Errc::HypothesisFails: return "HypothesisFails";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotTractable: return "NotTractable";
    case Errc::NotYes: return "NotYes";
    case Errc::NotPromise: return "NotPromise";
    case Errc::NoFixingSet: return "NoFixingSet";
    case Errc::UnsatisfiedEdge: return "UnsatisfiedEdge";
    case Errc::NotProjectionClosed: return "NotProjectionClosed";
    case Errc::MissingIdentity: return "MissingIdentity";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::Internal: return "Internal";
  }
  return "Error";
}

WeightSet weight_set(std::initializer_list<int> weights) {
  WeightSet s = 0;
  for (int w : weights) s |= WeightSet{1} << w;
  return s;
}

WeightSet weight_set_range(int lo, int hi) {
  WeightSet s = 0;
  for (int w = lo; w <= hi; ++w) s |= WeightSet{1} << w;
  return s;
}

std::vector<int> weight_set_values(WeightSet s) {
  std::vector<int> out;
  for (int w = 0; w < 32; ++w)
    if ((s >> w) & 1) out.push_back(w);
  return out;
}

int weight_set_min(WeightSet s) { return std::countr_zero(s); }

int weight_set_max(WeightSet s) { return 31 - std::countl_zero(s); }

Relation::Relation(int arity) : arity_(arity) {
  require(arity >= 1 && arity <= kMaxRelationArity, Errc::ArityMismatch,
          "relation arity " + std::to_string(arity) + " outside [1, " +
              std::to_string(kMaxRelationArity) + "]");
  bits_ = BitVec(std::size_t{1} << arity);
}

Relation::Relation(int arity, const std::vector<std::uint32_t>& tuples) : Relation(arity) {
  for (auto t : tuples) insert(t);
}

void Relation::insert(std::uint32_t tuple) {
  require(tuple < tuple_count(), Errc::ArityMismatch,
          "tuple index " + std::to_string(tuple) + " out of range for arity " +
              std::to_string(arity_));
  bits_.set(tuple);
}

bool Relation::is_subset_of(const Relation& o) const {
  return arity_ == o.arity_ && bits_.is_subset_of(o.bits_);
}

Relation make_ham(int k, WeightSet s) {
  Relation r(k);
  require((s & ~weight_set_full(k)) == 0, Errc::WeightOutOfRange,
          "weight outside {0.." + std::to_string(k) + "}");
  for (std::uint32_t t = 0; t < r.tuple_count(); ++t)
    if (weight_in(s, std::popcount(t))) r.insert(t);
  return r;
}

std::optional<SymmetricProfile> symmetric_profile(const Relation& r) {
  const int k = r.arity();
  WeightSet present = 0, full = 0;
  for (std::uint32_t t = 0; t < r.tuple_count(); ++t) {
    WeightSet bit = WeightSet{1} << std::popcount(t);
    full |= bit;
    if (r.contains(t)) present |= bit;
  }
  // Symmetric iff each weight level is all-in or all-out.
  for (std::uint32_t t = 0; t < r.tuple_count(); ++t)
    if (r.contains(t) != weight_in(present, std::popcount(t))) return std::nullopt;
  (void)full;
  return SymmetricProfile{k, present};
}

Relation flip(const Relation& r, std::uint32_t coords) {
  require((coords >> r.arity()) == 0, Errc::ArityMismatch, "flip set outside coordinates");
  Relation out(r.arity());
  for (std::uint32_t t = 0; t < r.tuple_count(); ++t)
    if (r.contains(t)) out.insert(t ^ coords);
  return out;
}

} // namespace pcsp
