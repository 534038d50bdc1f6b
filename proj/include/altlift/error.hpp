#ifndef ALTLIFT_ERROR_HPP_
#define ALTLIFT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace altlift {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Operands of different degree.
  class SizeError : public Error {
   public:
    using Error::Error;
  };

  // Input outside an operation's domain (odd permutation where an even one
  // is required, non-unit residue, malformed group parameters, ...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // Text or JSON that cannot be read.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A search ran out of its node budget before reaching a verdict.
  class IndeterminateError : public Error {
   public:
    using Error::Error;
  };

  // Counts derived from a data set that are not integral or go negative.
  class InconsistencyError : public Error {
   public:
    using Error::Error;
  };

  // A construction that is supposed to succeed failed its own check.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace altlift

#endif  // ALTLIFT_ERROR_HPP_
