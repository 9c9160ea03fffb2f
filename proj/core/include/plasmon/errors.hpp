#pragma once

#include <stdexcept>
#include <string>

namespace plasmon {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / input validation.
struct NonPositiveIndex : Error { using Error::Error; };
struct InvalidModel : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// Special functions.
struct NoConvergence : Error { using Error::Error; };
struct NearPole : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// Secular function.
struct PoleProximity : Error { using Error::Error; };

// Root finding.
struct BoundaryZero : Error { using Error::Error; };
struct AmbiguousWinding : Error { using Error::Error; };
struct NewtonDiverged : Error { using Error::Error; };

// Dispersion / collar / counting.
struct BranchPoint : Error { using Error::Error; };
struct NoSolution : Error { using Error::Error; };
struct NoBracket : Error { using Error::Error; };
struct DivisionNearZero : Error { using Error::Error; };
struct EmptyFiber : Error { using Error::Error; };
struct IncompleteScan : Error { using Error::Error; };

// Mode synthesis.
struct GridTooCoarse : Error { using Error::Error; };

} // namespace plasmon
