#pragma once

#include <stdexcept>
#include <string>

namespace sdyn {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A denominator or coth argument vanishes (or is within the pole margin).
class PoleError : public Error {
 public:
  PoleError(const std::string& what, std::string offending)
      : Error(what), offending_(std::move(offending)) {}
  explicit PoleError(const std::string& what) : Error(what) {}

  /// Printable form of the vanishing expression.
  const std::string& offending() const noexcept { return offending_; }

 private:
  std::string offending_;
};

class NotRationalError : public Error {
 public:
  using Error::Error;
};

class DegenerateFormError : public Error {
 public:
  using Error::Error;
};

class NonDiagonalizableError : public Error {
 public:
  using Error::Error;
};

class OddActorError : public Error {
 public:
  using Error::Error;
};

class MissingSignChoiceError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input: polynomial strings, s-expressions, spec files.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sdyn
