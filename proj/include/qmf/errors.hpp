#pragma once

#include <stdexcept>
#include <string>

namespace qmf {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact ring
struct IncompatibleOrder : Error { using Error::Error; };

// series
struct PrecisionExceeded : Error { using Error::Error; };

/// Raised when an operation would need more input coefficients than are
/// available; `required` is the minimal input precision that would work.
struct InsufficientPrecision : Error {
    long required;
    InsufficientPrecision(const std::string& msg, long required_prec)
        : Error(msg), required(required_prec) {}
};

// arithmetic / characters
struct NotSquarefree : Error { using Error::Error; };
struct NotADiscriminant : Error { using Error::Error; };
struct NotFundamental : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };
struct BadUnitaryDivisor : Error { using Error::Error; };

// forms
struct NonIntegralEtaExponent : Error { using Error::Error; };
struct HalfIntegralWeightUnsupported : Error { using Error::Error; };

// lifts
struct VanishingNormalizer : Error { using Error::Error; };

// theorem builders
struct HypothesisViolated : Error { using Error::Error; };

// file format
struct ParseError : Error {
    long line;
    ParseError(const std::string& msg, long line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};
struct DuplicateIndex : ParseError { using ParseError::ParseError; };
struct IndexOutOfRange : ParseError { using ParseError::ParseError; };

} // namespace qmf
