#pragma once

#include <stdexcept>
#include <string>

namespace tropimpl {

enum class ErrorKind {
    DimensionMismatch,
    EmptyInput,
    ZeroVector,
    ZeroPolynomial,
    NegativeExponent,
    BothConstant,
    CommonFactor,
    InvalidArgument,
    NonIntegralWeight,
    IrrationalExcessPointSuspected,
    StepLimitExceeded,
    PointNotInModel,
    FactorMismatch,
    UnitFactor,
    InconsistentCellSize,
    NotRefinable,
    ParallelEndpoints,
    UnknownFormat,
    ParseError,
    NotCertified,
    RetryExhausted,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string location = {});

    ErrorKind kind() const { return kind_; }
    const std::string& location() const { return location_; }

private:
    ErrorKind kind_;
    std::string location_;
};

}  // namespace tropimpl
