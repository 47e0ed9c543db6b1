#ifndef DISCOCAT_ERRORS_HPP_
#define DISCOCAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace discocat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input: type notation, lexicon, model or store files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Tensor legs, spaces or ranks that do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

// A spider materialization that would exceed the configured entry budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace discocat

#endif  // DISCOCAT_ERRORS_HPP_
