#ifndef OTD_ERRORS_HPP
#define OTD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace otd {

// Every failure mode of the library maps to one of these codes. Verification
// routines return reports instead of throwing; codes are for genuine errors.
enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    SingularMatrix,
    RankDeficient,
    ZeroPolynomial,
    ZeroTerm,
    ParseError,
    NormalizationFailure,
    HypothesisViolated,
    InconsistentSystem,
    DegenerateInput,
    VerificationFailed,
    RetryExhausted,
    NoInvertibleSpanElement,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) fail(code, message);
}

} // namespace otd

#endif
