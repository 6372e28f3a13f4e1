#pragma once

#include <stdexcept>
#include <string>

namespace symm {

// Base class for all structured errors thrown by the library.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

#define SYMM_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                      \
  public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

SYMM_DEFINE_ERROR(MissingNeighbor);
SYMM_DEFINE_ERROR(MissingLabel);
SYMM_DEFINE_ERROR(MeshTangled);
SYMM_DEFINE_ERROR(DomainViolation);
SYMM_DEFINE_ERROR(FlowEscapedDomain);
SYMM_DEFINE_ERROR(StepSizeUnderflow);
SYMM_DEFINE_ERROR(SamplerViolatesManifold);
SYMM_DEFINE_ERROR(OutsideChart);
SYMM_DEFINE_ERROR(JacobianUnavailable);
SYMM_DEFINE_ERROR(RootFindFailed);
SYMM_DEFINE_ERROR(StepTooLarge);
SYMM_DEFINE_ERROR(NotConverged);
SYMM_DEFINE_ERROR(ConfigError);

#undef SYMM_DEFINE_ERROR

}  // namespace symm
