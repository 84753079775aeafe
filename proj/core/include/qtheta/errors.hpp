#pragma once

#include <stdexcept>
#include <string>

namespace qtheta {

// Failures that stem from mathematically invalid input (as opposed to
// programming errors). The CLI maps these to exit status 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(const std::string& kind, const std::string& reason)
      : std::runtime_error(kind + ": " + reason), kind_(kind), reason_(reason) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string kind_;
  std::string reason_;
};

class NotAdmissible : public DomainError {
 public:
  explicit NotAdmissible(const std::string& reason) : DomainError("NotAdmissible", reason) {}
};

class LevelMismatch : public DomainError {
 public:
  explicit LevelMismatch(const std::string& reason) : DomainError("LevelMismatch", reason) {}
};

// Raised when a series that must live on integer exponents does not.
class NonIntegerSupport : public DomainError {
 public:
  explicit NonIntegerSupport(const std::string& reason)
      : DomainError("NonIntegerSupport", reason) {}
};

}  // namespace qtheta
