#pragma once

#include <stdexcept>
#include <string>

namespace gheights {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input violates a documented mathematical precondition.
struct PreconditionError : Error {
    using Error::Error;
};

/// Input exceeds a documented desk-scale cap.
struct ScaleError : Error {
    using Error::Error;
};

/// A quantity the library guarantees internally failed to hold; indicates a bug.
struct InternalInvariantError : Error {
    using Error::Error;
};

/// Malformed input file or JSON document.
struct SchemaError : Error {
    using Error::Error;
};

struct RankError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct DimensionError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct DegreeError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct SquarefreeError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct DivisionByZero : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct ZeroError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct GroupError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotUnitError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotNormalError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct OrderError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct ContainmentError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotMaximalError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct SameOrbitError : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct IrreducibilityError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// Refinement loop hit its iteration cap before certifying the request.
struct PrecisionError : Error {
    using Error::Error;
};
/// Deterministic search exhausted its candidate cap.
struct SearchCapError : Error {
    using Error::Error;
};

}  // namespace gheights
