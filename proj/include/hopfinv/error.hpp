#ifndef HOPFINV_ERROR_HPP
#define HOPFINV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hopfinv {

enum class ErrorCode {
    ParseError,
    ValidationError,
    SizeCapExceeded,
    DivisionByZero,
    RankMismatch,
    FieldMismatch,
    DegreeMismatch,
    UnknownGenerator,
    NotScalar,
    NotJordanShape,
    NotScalarSigmaTau,
    InvalidIndex,
    InvalidArgument,
    PreconditionFailed,
    CancellationDetected,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace hopfinv

#endif
