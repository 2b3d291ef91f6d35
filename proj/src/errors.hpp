#pragma once

#include <stdexcept>
#include <string>

namespace conchoid {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input: polynomial grammar, rationals, unknown variable names.
struct ParseError : Error {
    using Error::Error;
};

// Structural misuse: mixed rings, variables missing from a ring, bad handles.
struct RingError : Error {
    using Error::Error;
};

// Mathematically invalid request: isotropic base line, zero polynomial where
// nonzero is required, degenerate rational map, no exact sample points.
struct DomainError : Error {
    using Error::Error;
};

// An ideal is not zero-dimensional where a finite solution set is required.
struct DimensionError : DomainError {
    using DomainError::DomainError;
};

// Configured resource caps (S-pairs, intermediate degree, retries) exhausted
// before completion.  Never a wrong answer, always this.
struct BudgetError : Error {
    using Error::Error;
};

// Distance solving found that a whole family of distances matches identically;
// the caller has to review the case by hand.
struct MatchingFamilyError : DomainError {
    using DomainError::DomainError;
};

} // namespace conchoid
