#pragma once

#include <stdexcept>

namespace fracsplit {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values (out-of-range parameters, unparseable input).
struct DomainError : Error {
    using Error::Error;
};

// A series did not settle before the iteration cap.
struct NonConvergence : Error {
    using Error::Error;
};

// Termwise Caputo derivative applied to an exponent outside the
// supported cases (non-integer exponent at or below n-1).
struct UnsupportedExponent : Error {
    using Error::Error;
};

struct MalformedFDE : Error {
    using Error::Error;
};

// Split-system shape not supported by chain elimination.
struct NotAChain : Error {
    using Error::Error;
};

// An order alpha_k falls outside its cell (k-1, k].
struct OrderCellViolation : Error {
    using Error::Error;
};

// A constructed chain link would have order zero.
struct DegenerateOrder : Error {
    using Error::Error;
};

// Orders do not fit inside a single unit cell (p, p+1].
struct CellViolation : Error {
    using Error::Error;
};

struct InvalidRefinement : Error {
    using Error::Error;
};

// An s-domain expression does not match the invertible family.
struct ShapeError : Error {
    using Error::Error;
};

struct StepTooCoarse : Error {
    using Error::Error;
};

struct UnsupportedOrder : Error {
    using Error::Error;
};

}  // namespace fracsplit
