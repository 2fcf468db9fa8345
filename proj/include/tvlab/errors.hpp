#ifndef TVLAB_ERRORS_HPP
#define TVLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tvlab {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input has the wrong dimension, length, or shape.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// A documented precondition does not hold for the given arguments.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// The input is degenerate: a sign that must be strict evaluated to zero,
// or a configuration that must be in general position is not.
// Degenerate inputs are reported, never perturbed.
class GenericityError : public Error {
public:
    explicit GenericityError(const std::string& what) : Error(what) {}
};

// An exactly singular linear system was passed to a solver that needs a
// unique solution.
class SingularSystemError : public Error {
public:
    explicit SingularSystemError(const std::string& what) : Error(what) {}
};

// Malformed textual input (statement strings, CSV/JSON points, encodings).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A randomized search exhausted its attempt budget.
class SamplingError : public Error {
public:
    explicit SamplingError(const std::string& what) : Error(what) {}
};

// An internal cross-check failed.  Either a bug or a falsified expectation;
// both must surface loudly instead of being swallowed.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

} // namespace tvlab

#endif
