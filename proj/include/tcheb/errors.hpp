#pragma once

#include <stdexcept>
#include <string>

namespace tcheb {

/// Base class for all library errors. `exit_code` follows the CLI contract:
/// 2 = usage/parse, 3 = domain, 4 = precondition.
class Error : public std::runtime_error {
 public:
  Error(std::string what, int exit_code)
      : std::runtime_error(std::move(what)), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what, 2) {}
};

struct MalformedLine : ParseError {
  explicit MalformedLine(const std::string& what) : ParseError(what) {}
};

struct NotGraded : Error {
  explicit NotGraded(const std::string& what) : Error(what, 2) {}
};

struct NotBounded : Error {
  explicit NotBounded(const std::string& what) : Error(what, 2) {}
};

struct CycleDetected : Error {
  explicit CycleDetected(const std::string& what) : Error(what, 2) {}
};

struct RankZeroInput : Error {
  explicit RankZeroInput(const std::string& what) : Error(what, 4) {}
};

struct RankZeroOperand : Error {
  explicit RankZeroOperand(const std::string& what) : Error(what, 4) {}
};

struct NotComparable : Error {
  explicit NotComparable(const std::string& what) : Error(what, 3) {}
};

struct NotCdExpressible : Error {
  explicit NotCdExpressible(const std::string& what) : Error(what, 3) {}
};

struct CoefficientOverflow : Error {
  explicit CoefficientOverflow(const std::string& what) : Error(what, 3) {}
};

struct NonPositiveDegree : Error {
  explicit NonPositiveDegree(const std::string& what) : Error(what, 3) {}
};

struct UnknownCheck : Error {
  explicit UnknownCheck(const std::string& what) : Error(what, 2) {}
};

struct BadParameter : Error {
  explicit BadParameter(const std::string& what) : Error(what, 2) {}
};

}  // namespace tcheb
