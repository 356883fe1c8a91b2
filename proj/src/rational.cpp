#include "otd/rational.hpp"

namespace otd {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::DimensionMismatch: return "dimension-mismatch";
        case ErrorCode::SingularMatrix: return "singular-matrix";
        case ErrorCode::RankDeficient: return "rank-deficient";
        case ErrorCode::ZeroPolynomial: return "zero-polynomial";
        case ErrorCode::ZeroTerm: return "zero-term";
        case ErrorCode::ParseError: return "parse-error";
        case ErrorCode::NormalizationFailure: return "normalization-failure";
        case ErrorCode::HypothesisViolated: return "hypothesis-violated";
        case ErrorCode::InconsistentSystem: return "inconsistent-system";
        case ErrorCode::DegenerateInput: return "degenerate-input";
        case ErrorCode::VerificationFailed: return "verification-failed";
        case ErrorCode::RetryExhausted: return "retry-budget-exhausted";
        case ErrorCode::NoInvertibleSpanElement: return "no-invertible-span-element";
    }
    return "unknown-error";
}

namespace bitstats {
thread_local bool enabled = false;
thread_local std::uint64_t max_bits = 0;
} // namespace bitstats

namespace {

bool valid_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    require(valid_integer_text(num) && valid_integer_text(den), ErrorCode::ParseError,
            "malformed rational '" + text + "'");
    mpz_class n(num, 10), d(den, 10);
    require(d != 0, ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace otd
