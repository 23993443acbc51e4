#pragma once

#include <stdexcept>
#include <string>

namespace spancat {

// Base class for all typed failures raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct CompositionMismatch : Error {
  explicit CompositionMismatch(const std::string& what) : Error(what) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

struct GroupTooLarge : Error {
  explicit GroupTooLarge(const std::string& what) : Error(what) {}
};

struct SizeTooLarge : Error {
  explicit SizeTooLarge(const std::string& what) : Error(what) {}
};

struct ClosureBudgetExceeded : Error {
  explicit ClosureBudgetExceeded(const std::string& what) : Error(what) {}
};

struct NotSemiadditive : Error {
  explicit NotSemiadditive(const std::string& what) : Error(what) {}
};

struct CompositionNotBilinear : Error {
  explicit CompositionNotBilinear(const std::string& what) : Error(what) {}
};

struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& what) : Error(what) {}
};

// Raised when a piece of input data violates a structural invariant
// (bad permutation, action that is not a homomorphism, malformed table).
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// Raised when a truncated construction is not closed under composition
// (e.g. exact bounded-entry matrix categories).
struct TruncationNotClosed : Error {
  explicit TruncationNotClosed(const std::string& what) : Error(what) {}
};

// JSON input that fails to parse or deserialize, with location info when known.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace spancat
