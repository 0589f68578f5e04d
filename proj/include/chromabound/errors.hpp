#pragma once

#include <stdexcept>
#include <string>

namespace chromabound {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

class UnknownEdgeError : public Error {
 public:
  explicit UnknownEdgeError(int id)
      : Error("unknown edge id " + std::to_string(id)), id_(id) {}

  int id() const noexcept { return id_; }

 private:
  int id_;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Raised instead of returning an approximation when an exhaustive oracle
// would exceed its configured work budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Bounds need a finite girth.
class AcyclicGraphError : public Error {
 public:
  AcyclicGraphError() : Error("girth undefined: graph has no circuit") {}
};

}  // namespace chromabound
