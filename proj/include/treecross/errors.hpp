#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace treecross {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments from the caller: ranges, shard indices, duplicate fit points.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The input data itself violates a contract (malformed code, tree, forest, point set).
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidCode : public InputError {
 public:
  using InputError::InputError;
};

class InvalidTree : public InputError {
 public:
  using InputError::InputError;
};

class InvalidForest : public InputError {
 public:
  using InputError::InputError;
};

class CoordinateOverflow : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line) : InputError(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Three labels (1-based) that lie on a common line.
class GeneralPositionError : public InputError {
 public:
  GeneralPositionError(const std::string& what, std::array<int, 3> triple)
      : InputError(what), triple_(triple) {}
  const std::array<int, 3>& triple() const { return triple_; }

 private:
  std::array<int, 3> triple_;
};

class SingularSystem : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// A computation was refused because it exceeds a configured cost guard.
class GuardRefusal : public Error {
 public:
  using Error::Error;
};

}  // namespace treecross
