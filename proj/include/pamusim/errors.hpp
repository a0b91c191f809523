#ifndef PAMUSIM_ERRORS_HPP
#define PAMUSIM_ERRORS_HPP

#include <stdexcept>

namespace pamusim {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed document: bad JSON, or a missing/mistyped field.
struct SchemaError : Error {
    using Error::Error;
};

/// Well-formed document or argument that violates a model invariant.
/// The message names the offending field or entity.
struct ValidationError : Error {
    using Error::Error;
};

/// Etalon store operation invoked with zero etalons.
struct EmptyStoreError : ValidationError {
    using ValidationError::ValidationError;
};

/// Etalons of unequal length in a store without end-marker correction.
struct UnequalLengthsError : ValidationError {
    using ValidationError::ValidationError;
};

/// step() called after the distributor ran past the matrix depth.
struct AutomatonExhaustedError : Error {
    using Error::Error;
};

/// Input outside a variable's universe while clamping is disabled.
struct UniverseViolationError : Error {
    using Error::Error;
};

/// Class label without a control table entry.
struct UnknownClassError : Error {
    using Error::Error;
};

}  // namespace pamusim

#endif  // PAMUSIM_ERRORS_HPP
