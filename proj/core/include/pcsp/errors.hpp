#pragma once

#include <stdexcept>
#include <string>

namespace pcsp {

enum class Errc {
  ArityMismatch,
  PromiseViolation,
  WeightOutOfRange,
  LengthMismatch,
  TooLarge,
  EvenArity,
  EmptyRelation,
  EmptyWeights,
  UnsupportedNonSymmetric,
  NotFolded,
  NonSymmetric,
  FamilyPresent,
  OutOfScope,
  NotHard,
  HypothesisFails,
  HypothesisViolated,
  NotTractable,
  NotYes,
  NotPromise,
  NoFixingSet,
  UnsatisfiedEdge,
  NotProjectionClosed,
  MissingIdentity,
  ParseError,
  SchemaError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

} // namespace pcsp
