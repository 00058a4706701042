#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace symtruss {

// Base for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Kernel arithmetic errors.
class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("division by zero") {}
};

class NestedRadicalError : public Error {
 public:
  NestedRadicalError() : Error("nested radicals are not supported") {}
};

class ZeroRadicandError : public Error {
 public:
  ZeroRadicandError() : Error("square root of zero expression") {}
};

class NegativeRadicandError : public Error {
 public:
  NegativeRadicandError() : Error("square root of a negative constant") {}
};

class UnknownSymbolError : public Error {
 public:
  explicit UnknownSymbolError(const std::string& name)
      : Error("unknown symbol: " + name) {}
};

class EnvMismatchError : public Error {
 public:
  EnvMismatchError() : Error("expressions belong to different parameter environments") {}
};

class NonPositiveBindingError : public Error {
 public:
  explicit NonPositiveBindingError(const std::string& name)
      : Error("non-positive value bound to symbol " + name +
              " (all parameters are assumed strictly positive)") {}
};

class UnboundSymbolError : public Error {
 public:
  explicit UnboundSymbolError(const std::string& name)
      : Error("no value bound to symbol " + name) {}
};

// Internal invariant violation; indicates a bug, not a user error.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

// Model loading / validation.
class ModelError : public Error {
 public:
  ModelError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : Error(join(issues)), issues_(std::move(issues)) {}
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out = "model validation failed:";
    for (const auto& s : issues) out += "\n  - " + s;
    return out;
  }
  std::vector<std::string> issues_;
};

// Engine errors.
class KinematicInstabilityError : public Error {
 public:
  KinematicInstabilityError()
      : Error("kinematically unstable model: the free-DOF stiffness matrix is "
              "symbolically singular") {}
};

class AreaUnknownError : public Error {
 public:
  AreaUnknownError()
      : Error("area unknown: element stress requires stiffness given as an (E, A) pair") {}
};

class UnknownQuantityError : public Error {
 public:
  explicit UnknownQuantityError(const std::string& what)
      : Error("unknown quantity: " + what) {}
};

}  // namespace symtruss
