#pragma once

#include <stdexcept>
#include <string>

namespace dring {

/// Malformed or inconsistent user input (exit code 1 at the CLI).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured work cap was exceeded (exit code 2).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not (exit code 3).
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dring
