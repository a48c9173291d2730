#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// A state that must be normalized is not (norm off by more than the allowed slack).
class NormalizationError : public std::invalid_argument {
 public:
  NormalizationError(const std::string& what, double norm)
      : std::invalid_argument(what), norm_(norm) {}
  double norm() const noexcept { return norm_; }

 private:
  double norm_;
};

/// A coin matrix failed parsing or the unitarity check.
class CoinValidationError : public std::runtime_error {
 public:
  CoinValidationError(const std::string& what, double max_deviation = 0.0)
      : std::runtime_error(what), max_deviation_(max_deviation) {}
  double max_deviation() const noexcept { return max_deviation_; }

 private:
  double max_deviation_;
};

/// Malformed state file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qwalk
