#pragma once

#include <stdexcept>
#include <string>

namespace trop {

// Input that violates the file grammar or the structural rules of a system
// (duplicate exponents, empty supports where a term is required, ...).
class MalformedInputError : public std::runtime_error {
public:
  explicit MalformedInputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a certificate is requested but the shifted polytope contains
// no lattice points, so no square subsystem exists to certify with.
class EmptyCESetError : public std::runtime_error {
public:
  explicit EmptyCESetError(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant violation; any occurrence is a bug, not a user error.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace trop
