#include "tropimpl/error.hpp"

namespace tropimpl {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::EmptyInput: return "empty-input";
        case ErrorKind::ZeroVector: return "zero-vector";
        case ErrorKind::ZeroPolynomial: return "zero-polynomial";
        case ErrorKind::NegativeExponent: return "negative-exponent";
        case ErrorKind::BothConstant: return "both-constant";
        case ErrorKind::CommonFactor: return "common-factor";
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::NonIntegralWeight: return "nonintegral-weight";
        case ErrorKind::IrrationalExcessPointSuspected: return "irrational-excess-point-suspected";
        case ErrorKind::StepLimitExceeded: return "step-limit-exceeded";
        case ErrorKind::PointNotInModel: return "point-not-in-model";
        case ErrorKind::FactorMismatch: return "factor-mismatch";
        case ErrorKind::UnitFactor: return "unit-factor";
        case ErrorKind::InconsistentCellSize: return "inconsistent-cell-size";
        case ErrorKind::NotRefinable: return "not-refinable";
        case ErrorKind::ParallelEndpoints: return "parallel-endpoints";
        case ErrorKind::UnknownFormat: return "unknown-format";
        case ErrorKind::ParseError: return "parse-error";
        case ErrorKind::NotCertified: return "not-certified";
        case ErrorKind::RetryExhausted: return "retry-exhausted";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string location)
    : std::runtime_error(location.empty() ? message : location + ": " + message),
      kind_(kind),
      location_(std::move(location)) {}

}  // namespace tropimpl
