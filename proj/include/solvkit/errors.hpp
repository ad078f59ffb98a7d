// solvkit: exact computer algebra for solvable polynomial algebras.
// Distributed under the Apache License, Version 2.0; see LICENSE.

#ifndef SOLVKIT_ERRORS_HPP
#define SOLVKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace solvkit {

// Exponent arities disagree with the ordering or algebra in force.
struct ArityMismatch : std::invalid_argument {
  explicit ArityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A module element mentions a component outside the declared rank.
struct RankMismatch : std::invalid_argument {
  explicit RankMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Caller violated a value-level precondition (zero denominator, zero
// inverse, nonpositive weight, malformed descriptor, ...).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A structural precondition failed, e.g. truncating a basis whose ordering
// is not an elimination ordering for the requested sub-basis.
struct StructuralMismatch : std::invalid_argument {
  explicit StructuralMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// An internal re-verification failed. Never raised by correct code paths;
// indicates a defect, not a user error.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace solvkit

#endif  // SOLVKIT_ERRORS_HPP
