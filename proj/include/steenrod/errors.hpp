#pragma once

#include <stdexcept>
#include <string>

namespace steenrod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sublattice that was required to sit inside another does not.
struct ContainmentViolation : Error {
    using Error::Error;
};

// A matrix does not descend to a map of the given subquotients.
struct NotWellDefined : Error {
    using Error::Error;
};

// Malformed complex, map or homotopy: shape mismatch, dd != 0, non-commuting square.
struct ValidationError : Error {
    using Error::Error;
};

struct IncoherentMorphism : ValidationError {
    using ValidationError::ValidationError;
};

struct IncoherentHomotopy : ValidationError {
    using ValidationError::ValidationError;
};

struct TowerTooShort : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// An exactness or naturality certificate came back false.
struct CertificateFailure : Error {
    using Error::Error;
};

}  // namespace steenrod
