#ifndef TEXDEFECT_ERRORS_HPP
#define TEXDEFECT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace texdefect {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// File could not be read, decoded, or written.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

/// An operation was called with inputs that violate its contract
/// (bad dimensions, out-of-range parameters, mismatched sizes, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

} // namespace texdefect

#endif // TEXDEFECT_ERRORS_HPP
