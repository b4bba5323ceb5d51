#pragma once

#include <stdexcept>
#include <string>

namespace mf {

// Base of every error raised by the library. `kind()` is a stable tag used in
// reports and by the command-line front end to pick an exit code.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message);
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define MF_DECLARE_ERROR(Name)                                     \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

MF_DECLARE_ERROR(ParseError);
MF_DECLARE_ERROR(AxiomViolation);
MF_DECLARE_ERROR(SizeExceeded);
MF_DECLARE_ERROR(NotTwoSided);
MF_DECLARE_ERROR(NotCyclic);
MF_DECLARE_ERROR(NoCover);
MF_DECLARE_ERROR(HypothesisViolated);
MF_DECLARE_ERROR(PreconditionFailed);
MF_DECLARE_ERROR(DivisionByZero);
MF_DECLARE_ERROR(NotDivisible);
MF_DECLARE_ERROR(BoundExceeded);
MF_DECLARE_ERROR(IntegralityViolation);
MF_DECLARE_ERROR(TrivialRing);
MF_DECLARE_ERROR(UsageError);

// A proved equivalence came out unequal: always an implementation bug.
MF_DECLARE_ERROR(EquivalenceViolation);

#undef MF_DECLARE_ERROR

}  // namespace mf
