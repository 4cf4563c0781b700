#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cremona {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct BothZero : Error {
  using Error::Error;
};

struct AllZero : Error {
  using Error::Error;
};

struct ModulusMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

/// Raised when a composition would exceed the configured degree cap.
/// Carries the offending degree and the cap in force.
struct DegreeCapExceeded : Error {
  DegreeCapExceeded(long long degree, long long cap, const std::string &where)
      : Error("degree cap exceeded: degree " + std::to_string(degree) +
              " > cap " + std::to_string(cap) +
              (where.empty() ? "" : " (" + where + ")")),
        degree(degree), cap(cap), context(where) {}
  long long degree;
  long long cap;
  std::string context;
};

struct ZeroDenominator : Error {
  using Error::Error;
};

struct NotUnimodular : Error {
  using Error::Error;
};

struct NotHyperbolic : Error {
  using Error::Error;
};

/// An inverse witness failed its defining identity.
struct BadInverse : Error {
  explicit BadInverse(const std::string &generator)
      : Error("generator '" + generator + "' has a bad inverse witness"),
        generator(generator) {}
  std::string generator;
};

struct BadMobius : Error {
  using Error::Error;
};

struct TooShort : Error {
  using Error::Error;
};

/// Parse failure with the byte offset of the offending character.
struct SyntaxError : Error {
  SyntaxError(const std::string &what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct UsageError : Error {
  using Error::Error;
};

} // namespace cremona
