#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpoker {

// Card text that cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class ViolationKind { WrongCount, DuplicateCard, InvalidCard };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

// Deal validation failure. Carries every violation found, not just the first.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& message, std::vector<Violation> violations)
      : std::runtime_error(message), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// A foul division was passed where a legally ordered one is required.
class FoulHandError : public std::runtime_error {
 public:
  explicit FoulHandError(const std::string& what) : std::runtime_error(what) {}
};

// The greedy divider assembled a foul partition. Always a bug, never a result.
class FoulConstructedError : public std::logic_error {
 public:
  explicit FoulConstructedError(const std::string& what) : std::logic_error(what) {}
};

// Calibration input that does not determine a transform (collinear or
// coincident reference points, or a singular result).
class CalibrationError : public std::runtime_error {
 public:
  explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cpoker
