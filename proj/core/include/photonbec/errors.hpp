#pragma once

#include <stdexcept>
#include <string>

namespace photonbec {

// Iterative solver failed to reach its tolerance within the iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive ODE step size underflowed; carries the time at which it happened.
class StiffnessError : public std::runtime_error {
 public:
  StiffnessError(const std::string& what, double t_fail)
      : std::runtime_error(what), time_of_failure(t_fail) {}
  double time_of_failure;
};

// Malformed input file; carries the 1-based line number of the offense.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, long line)
      : std::runtime_error(what), line_number(line) {}
  long line_number;
};

// A fit that completed but does not meet the configured quality bar.
class FitQualityError : public std::runtime_error {
 public:
  explicit FitQualityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace photonbec
