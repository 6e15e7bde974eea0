#ifndef TROPLP_ERRORS_HPP
#define TROPLP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace troplp {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Binary operation on group values of different arity.
class ArityMismatchError : public Error {
public:
  explicit ArityMismatchError(const std::string& msg) : Error(msg) {}
};

/// Malformed input data (JSON syntax, bad rational literals, wrong shapes).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Structurally valid input that violates a model invariant
/// (e.g. a payment matrix with an identically-bottom column).
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// A permanent that must be tropically non-singular is bottom.
class SingularityError : public Error {
public:
  explicit SingularityError(const std::string& msg) : Error(msg) {}
};

/// A permanent is finite but attained by more than one permutation,
/// where the caller requires a tropically non-singular matrix.
class DegeneracyError : public Error {
public:
  explicit DegeneracyError(const std::string& msg) : Error(msg) {}
};

/// Exhaustive check requested on an instance above the configured size guard.
class SizeGuardError : public Error {
public:
  explicit SizeGuardError(const std::string& msg) : Error(msg) {}
};

/// An internal invariant failed; indicates a bug, not bad input.
class InvariantViolation : public Error {
public:
  explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

} // namespace troplp

#endif
