#pragma once

#include <stdexcept>
#include <string>

namespace qtchar {

enum class ErrorKind {
  InvalidRank,
  Mismatch,
  NotIDominant,
  CapExceeded,
  WellDefinednessViolation,
  NoSolution,
  NonPolynomialQ,
  NonPositiveCoefficient,
  NotPointed,
  IncompatibleInclusion,
  UnsupportedFolding,
  NonConstantCoefficient,
  NonUnitConstant,
  ParseError,
  Internal,
};

const char* error_name(ErrorKind k);

// Domain error carrying a structured name that the CLI surfaces verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& what) { throw Error(k, what); }

inline void require(bool cond, ErrorKind k, const std::string& what) {
  if (!cond) fail(k, what);
}

}  // namespace qtchar
