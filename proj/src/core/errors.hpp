#pragma once

#include <stdexcept>
#include <string>

namespace minsph {

// Parse failures for descriptor strings and config files.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// A check or operation was asked to run on input violating its hypotheses
// (e.g. a totally geodesic surface fed to a non-totally-geodesic theorem).
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: non-finite integrand, optimizer self-check mismatch.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minsph
