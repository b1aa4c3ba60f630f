#pragma once

#include <stdexcept>
#include <string>

namespace hardylab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error { using Error::Error; };
struct NonPositiveExpression : Error { using Error::Error; };
struct InconclusiveClassification : Error { using Error::Error; };
struct QuadratureFailure : Error { using Error::Error; };
struct ClassMismatch : Error { using Error::Error; };
struct ExtrapolationRequired : Error { using Error::Error; };
struct MeshMismatch : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };
struct HypothesisNotMet : Error { using Error::Error; };
struct InvalidBracket : Error { using Error::Error; };
struct FitRejected : Error { using Error::Error; };
struct NonPositiveT : Error { using Error::Error; };
struct ToleranceExceeded : Error { using Error::Error; };
struct ProfileTooCoarse : Error { using Error::Error; };
struct IndefiniteH : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace hardylab
