#pragma once

#include <stdexcept>
#include <string>

namespace ulrichcalc {

// Base of every error this library throws on a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

class MissingSymbol : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotUnivariate : public Error {
 public:
  using Error::Error;
};

class ModelMismatch : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedRank : public Error {
 public:
  using Error::Error;
};

class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

// Raised when the Ulrich linear system has no solution; indicates a bug.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

}  // namespace ulrichcalc
