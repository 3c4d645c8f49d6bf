#pragma once

#include <stdexcept>
#include <string>

namespace multizero {

enum class ErrorCode {
    ZeroPolynomial,
    DuplicateAbscissa,
    DivisionByZero,
    OutOfSupport,
    InvalidParameters,
    NoClosedForm,
    InfiniteSupport,
    IndexOutOfRange,
    SupportViolation,
    MultiplicityTooSmall,
    ZeroLeadCoefficient,
    ParameterDomain,
    AllZero,
    NotPolynomialBasis,
    InstanceTooLarge,
    EmptyCode,
    DistancePreconditionViolated,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace multizero
