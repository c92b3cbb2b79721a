#pragma once

#include <stdexcept>
#include <string>

namespace nvf {

// Two families of failure. A precondition error means the caller handed in
// data outside an operation's domain; an invariant error means the library
// produced something it should never produce.
class Error : public std::runtime_error {
 public:
  enum class Severity { Precondition, Invariant };

  Error(std::string name, const std::string& what,
        Severity severity = Severity::Precondition)
      : std::runtime_error(name + ": " + what),
        name_(std::move(name)),
        severity_(severity) {}

  const std::string& name() const noexcept { return name_; }
  Severity severity() const noexcept { return severity_; }

 private:
  std::string name_;
  Severity severity_;
};

#define NVF_DECLARE_ERROR(Name, Sev)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what)                             \
        : Error(#Name, what, Error::Severity::Sev) {}                  \
  };

NVF_DECLARE_ERROR(ZeroPath, Precondition)
NVF_DECLARE_ERROR(RankTooLarge, Precondition)
NVF_DECLARE_ERROR(ParamMismatch, Precondition)
NVF_DECLARE_ERROR(ParseError, Precondition)
NVF_DECLARE_ERROR(NotInvertible, Precondition)
NVF_DECLARE_ERROR(NotAPoint, Precondition)
NVF_DECLARE_ERROR(SingularPoint, Precondition)
NVF_DECLARE_ERROR(FieldNotVanishing, Precondition)
NVF_DECLARE_ERROR(FieldZeroAtMarking, Precondition)
NVF_DECLARE_ERROR(PreconditionFailed, Precondition)
NVF_DECLARE_ERROR(OutOfRange, Precondition)
NVF_DECLARE_ERROR(KindMismatch, Precondition)
NVF_DECLARE_ERROR(NotAPnObject, Precondition)
NVF_DECLARE_ERROR(NonPolynomialInput, Precondition)
NVF_DECLARE_ERROR(GridTooCoarse, Precondition)
NVF_DECLARE_ERROR(NonUniqueContraction, Invariant)
NVF_DECLARE_ERROR(DepthExceeded, Invariant)
NVF_DECLARE_ERROR(InvariantViolation, Invariant)

#undef NVF_DECLARE_ERROR

}  // namespace nvf
