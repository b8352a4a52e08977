#ifndef ORDTOP_ERRORS_HPP
#define ORDTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "ordtop/subset_mask.hpp"

namespace ordtop {

/// Base class for every error the library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input errors: malformed or axiom-violating structures.
struct InputError : Error {
    using Error::Error;
};

/// Resource errors: a stated cap or budget was exceeded.
struct ResourceError : Error {
    using Error::Error;
};

struct NotATopology : InputError {
    NotATopology(std::string msg, SubsetMask a, SubsetMask b)
        : InputError(std::move(msg)), first(a), second(b) {}
    explicit NotATopology(std::string msg) : InputError(std::move(msg)) {}
    // Violating pair for a union/intersection closure failure.
    SubsetMask first{}, second{};
};

struct NotAntisymmetric : InputError {
    NotAntisymmetric(std::string msg, int a, int b) : InputError(std::move(msg)), x(a), y(b) {}
    int x = -1, y = -1; // mutually related distinct elements
};

struct NotIdempotent : InputError {
    NotIdempotent(std::string msg, int a) : InputError(std::move(msg)), x(a) {}
    int x;
};

struct NotCommutative : InputError {
    NotCommutative(std::string msg, int a, int b) : InputError(std::move(msg)), x(a), y(b) {}
    int x, y;
};

struct NotAssociative : InputError {
    NotAssociative(std::string msg, int a, int b, int c)
        : InputError(std::move(msg)), x(a), y(b), z(c) {}
    int x, y, z;
};

struct EmptySet : InputError {
    using InputError::InputError;
};

struct EmptyCarrier : InputError {
    using InputError::InputError;
};

struct NotDirected : InputError {
    using InputError::InputError;
};

struct ChoiceOutOfBounds : InputError {
    ChoiceOutOfBounds(std::string msg, int a, int b, int r)
        : InputError(std::move(msg)), x(a), y(b), returned(r) {}
    int x, y, returned;
};

struct CapacityExceeded : ResourceError {
    using ResourceError::ResourceError;
};

struct OracleBudgetExceeded : ResourceError {
    using ResourceError::ResourceError;
};

struct BudgetExceeded : ResourceError {
    using ResourceError::ResourceError;
};

struct HypothesisUnmet : InputError {
    using InputError::InputError;
};

/// Raised when a verified theorem's internal equality fails on a finite
/// instance. Never expected; the message carries a full structure dump.
struct LemmaViolation : Error {
    using Error::Error;
};

struct ProfileMismatch : InputError {
    using InputError::InputError;
};

struct UnknownPredicate : InputError {
    UnknownPredicate(std::string msg, std::string ident, std::size_t pos)
        : InputError(std::move(msg)), name(std::move(ident)), position(pos) {}
    std::string name;
    std::size_t position;
};

struct ParseError : InputError {
    ParseError(std::string msg, std::size_t pos) : InputError(std::move(msg)), position(pos) {}
    std::size_t position;
};

struct ValidationError : InputError {
    using InputError::InputError;
};

} // namespace ordtop

#endif
