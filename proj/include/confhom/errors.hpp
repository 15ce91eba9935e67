#pragma once

#include <stdexcept>
#include <string>

namespace confhom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed config text or command line.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally inconsistent arguments, e.g. series with different caps.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A violated precondition or hypothesis on the mathematical input.
class InputError : public Error {
 public:
  using Error::Error;
};

class DivergentSeriesError : public InputError {
 public:
  using InputError::InputError;
};

// An internal consistency check failed. Never legal on valid input.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace confhom
