#pragma once

#include <stdexcept>
#include <string>

namespace slicekit {

// Invalid mathematical input: bad dimension, zero direction, non-unit vector, ...
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent user data: body specs, density specs, negative samples.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Request outside what the implementation supports (e.g. tensor grids in high
// dimension). The message names the alternative when one exists.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative solver failed to reach its tolerance; message carries the last iterate.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace slicekit
