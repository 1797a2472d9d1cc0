#ifndef YBX_ERROR_HPP_
#define YBX_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ybx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (JSON shape, index range, arity).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The input does not satisfy the axioms required by the operation
/// (non-bijective table, non-invariant subset, bad relation set, ...).
class NotASolution : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Word reversing ran out of steps. With a complete complemented
/// presentation this cannot happen, so it flags a broken input.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded()
      : Error("word reversing budget exhausted: presentation not "
              "complemented-complete") {}
};

/// An internal cross-check that a proven statement guarantees came out
/// false. Carries a human-readable witness.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ybx

#endif  // YBX_ERROR_HPP_
