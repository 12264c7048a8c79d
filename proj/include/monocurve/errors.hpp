#ifndef MONOCURVE_ERRORS_HPP
#define MONOCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monocurve {

// Base of everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad caller input: maps to CLI exit code 2.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// A computation hit a configured resource cap: maps to CLI exit code 3.
// Never produces partial results.
struct EffortCapExceeded : Error {
    explicit EffortCapExceeded(const std::string& msg) : Error(msg) {}
};

struct EmptyInputError : InputError {
    explicit EmptyInputError(const std::string& msg) : InputError(msg) {}
};
struct NotNumericalError : InputError {
    explicit NotNumericalError(const std::string& msg) : InputError(msg) {}
};
struct NotInSemigroupError : InputError {
    explicit NotInSemigroupError(const std::string& msg) : InputError(msg) {}
};
struct DimensionMismatchError : InputError {
    explicit DimensionMismatchError(const std::string& msg) : InputError(msg) {}
};
struct DegreeTooSmallError : InputError {
    explicit DegreeTooSmallError(const std::string& msg) : InputError(msg) {}
};
struct ParameterOutOfRangeError : InputError {
    explicit ParameterOutOfRangeError(const std::string& msg) : InputError(msg) {}
};
struct InfeasibleSumError : InputError {
    explicit InfeasibleSumError(const std::string& msg) : InputError(msg) {}
};
struct NotExtremalError : InputError {
    explicit NotExtremalError(const std::string& msg) : InputError(msg) {}
};
struct NotQuadraticError : InputError {
    explicit NotQuadraticError(const std::string& msg) : InputError(msg) {}
};
struct ParseError : InputError {
    explicit ParseError(const std::string& msg) : InputError(msg) {}
};

} // namespace monocurve

#endif
