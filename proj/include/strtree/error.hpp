#pragma once

#include <stdexcept>
#include <string>

namespace strtree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (strings, trees, formulas, terms).
class ParseError : public Error {
 public:
  using Error::Error;
};

class NotATally : public Error {
 public:
  using Error::Error;
};

/// The string is not the code of any full binary tree.
class NotAlmostEven : public Error {
 public:
  using Error::Error;
};

class NotDecomposable : public Error {
 public:
  using Error::Error;
};

/// Carries the Env condition that failed, e.g. "(c)".
class NotASet : public Error {
 public:
  NotASet(std::string condition, const std::string& what)
      : Error(what), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

class NotAPair : public Error {
 public:
  using Error::Error;
};

/// A symbol used outside the signature it belongs to.
class SortError : public Error {
 public:
  using Error::Error;
};

class UnassignedVariable : public Error {
 public:
  explicit UnassignedVariable(const std::string& name)
      : Error("unassigned variable: " + name), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace strtree
