#pragma once

#include <stdexcept>
#include <string>

namespace ietlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// scalar
struct DuplicateSymbol : Error { using Error::Error; };
struct MalformedWitness : Error { using Error::Error; };
struct MixedSymbolTables : Error { using Error::Error; };
struct InsufficientPrecision : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// perm / gn
struct SizeMismatch : Error { using Error::Error; };
struct NotAReverser : Error { using Error::Error; };
struct NotAnInvolution : Error { using Error::Error; };
struct EnumerationBoundExceeded : Error { using Error::Error; };
struct AObstruction : Error { using Error::Error; };
struct NotInGn : Error { using Error::Error; };
struct InternalVerificationFailed : Error { using Error::Error; };

// iet / saf
struct OutOfDomain : Error { using Error::Error; };
struct NotAntisymmetric : Error { using Error::Error; };
struct BadPartition : Error { using Error::Error; };
struct NotOfThisForm : Error { using Error::Error; };
struct NotAnIet : Error { using Error::Error; };

// revfact / actions
struct NotPeriodicWithinBudget : Error { using Error::Error; };
struct NotAThreeIet : Error { using Error::Error; };
struct HypothesesViolated : Error { using Error::Error; };
struct RationalGapNotFound : Error { using Error::Error; };
struct UnboundGenerator : Error { using Error::Error; };
struct RelationNotSatisfied : Error { using Error::Error; };
struct UnresolvedComponent : Error { using Error::Error; };
struct NotApplicable : Error { using Error::Error; };
struct FreenessUnverified : Error { using Error::Error; };

}  // namespace ietlab
