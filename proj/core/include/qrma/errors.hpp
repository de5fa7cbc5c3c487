#pragma once

#include <stdexcept>
#include <string>

namespace qrma {

/// Caller passed parameters outside the model's admissible domain.
class InvalidParameter : public std::invalid_argument {
public:
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// The Fock-space truncation is too small for the requested state.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative eigensolver or truncation search failed to converge.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qrma
