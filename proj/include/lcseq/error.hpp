#pragma once

#include <stdexcept>

namespace lcseq {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments or misuse of an API contract (mixed fields, bad flags, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Division by zero in field or polynomial arithmetic.
class DivideByZeroError : public Error {
public:
    using Error::Error;
};

/// Period length does not factor as q^n * p^m with a single prime cofactor.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A number-theoretic precondition fails (primitive-root requirement, even cofactor).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed input data.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Broken internal invariant; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace lcseq
