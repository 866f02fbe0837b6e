#pragma once

#include <stdexcept>
#include <string>

namespace trimodel {

// A bounded search ran past its configured budget.  Callers map this to
// exit code 2; it is a resource verdict, never a mathematical one.
class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// The engine derived a contradiction with a theorem it is supposed to
// certify.  On shipped fixtures this signals a bug in the fixture or in the
// engine itself; it maps to exit code 3 and fails CI.
class TheoremViolation : public std::runtime_error {
  public:
    explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

// A fixture failed a load-time invariant (non-associative composition,
// non-self-injective algebra, ...).  The message names the failing check.
class FixtureError : public std::runtime_error {
  public:
    explicit FixtureError(const std::string& what) : std::runtime_error(what) {}
};

// A constructive operation needed an approximation or completeness witness
// that does not exist at the configured bound.
class NoApproximation : public std::runtime_error {
  public:
    explicit NoApproximation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trimodel
