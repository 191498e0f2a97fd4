#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace medv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula or consequence text. `position` is a 0-based byte offset.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// `&` and `|` mixed at the same level without parentheses.
class AmbiguityError : public ParseError {
public:
  using ParseError::ParseError;
};

/// Input that is well formed but outside an operation's domain: a relation
/// with a cycle, an index out of range, a map that is not surjective, ...
class DomainError : public Error {
public:
  using Error::Error;
};

/// A search would need more forcing-clause evaluations than allowed.
class WorkCapExceeded : public Error {
public:
  WorkCapExceeded(std::uint64_t required, std::uint64_t cap)
      : Error("work cap exceeded: search needs " + std::to_string(required) +
              " clause evaluations, cap is " + std::to_string(cap)),
        required_(required), cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// A machine check of a theorem-backed claim failed. Never expected; seeing
/// one means either a bug or a counterexample to the mathematics.
class VerificationFailure : public Error {
public:
  using Error::Error;
};

}  // namespace medv
