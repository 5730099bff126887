#pragma once

#include <stdexcept>
#include <string>

namespace h2 {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cycle-notation / literal syntax.
struct MalformedCycle : Error { using Error::Error; };
struct PointOutOfRange : Error { using Error::Error; };
struct RepeatedPointInCycle : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Algebraic preconditions.
struct DegreeMismatch : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };

// Seeds, families, certificates.
struct InvalidCombination : Error { using Error::Error; };
struct SeedValidationFailed : Error { using Error::Error; };
struct InvalidFamilyDegree : Error { using Error::Error; };
struct ValidationFailed : Error { using Error::Error; };
struct EndpointMismatch : Error { using Error::Error; };
struct VertexNotInOrbit : Error { using Error::Error; };

// Resource guards.
struct BudgetExceeded : Error { using Error::Error; };

} // namespace h2
