#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gkdv {

/// Input violates a documented precondition (bad grid size, bad window, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Gardner breather parameter set with Delta = alpha^2 + beta^2 - 2/(9 mu) <= 0.
class AdmissibilityError : public PreconditionError {
 public:
  AdmissibilityError(const std::string& what, double delta)
      : PreconditionError(what), delta_(delta) {}
  double delta() const noexcept { return delta_; }

 private:
  double delta_;
};

/// The evolved field left the small-data regime or became non-finite.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// Malformed snapshot file; carries the byte offset where parsing stopped.
class SnapshotFormatError : public std::runtime_error {
 public:
  SnapshotFormatError(const std::string& what, std::uint64_t offset)
      : std::runtime_error(what + " (at byte offset " + std::to_string(offset) + ")"),
        detail_(what),
        offset_(offset) {}
  std::uint64_t offset() const noexcept { return offset_; }
  /// Message without the offset suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::uint64_t offset_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace gkdv
