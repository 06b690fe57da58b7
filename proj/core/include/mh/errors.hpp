#pragma once

#include <stdexcept>
#include <string>

namespace mh {

// Base for all computation errors.  name() is the stable identifier printed
// by the CLI on its diagnostic stream (exit code 1).
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

#define MH_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                    \
  public:                                                        \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

MH_DEFINE_ERROR(NotInvertible);
MH_DEFINE_ERROR(PoleAtQ);
MH_DEFINE_ERROR(Divergent);
MH_DEFINE_ERROR(InsufficientOrder);
MH_DEFINE_ERROR(MarginViolated);
MH_DEFINE_ERROR(NegativeCoefficient);
MH_DEFINE_ERROR(DegreeMismatch);
MH_DEFINE_ERROR(WedgeRankExceeded);
MH_DEFINE_ERROR(ConstraintViolation);
MH_DEFINE_ERROR(OutOfRange);
MH_DEFINE_ERROR(Mismatch);
MH_DEFINE_ERROR(TooLarge);
MH_DEFINE_ERROR(BadCharacteristic);
MH_DEFINE_ERROR(ParseError);
MH_DEFINE_ERROR(Unsupported);

#undef MH_DEFINE_ERROR

}  // namespace mh
