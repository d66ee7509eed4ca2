#pragma once

#include <stdexcept>
#include <string>

namespace cammo {

/// Malformed input file. Carries the offending path plus a 1-based line
/// number (or 0 when the error is not line-oriented, e.g. a binary offset
/// reported in the message), so batch logs can point at the exact record.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, int line, const std::string& message)
      : std::runtime_error(line > 0 ? path + ":" + std::to_string(line) + ": " + message
                                    : path + ": " + message),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const noexcept { return path_; }
  int line() const noexcept { return line_; }

 private:
  std::string path_;
  int line_;
};

/// Depth alignment failed for a frame. The frame is skipped by the
/// pipeline; the reason ends up in the report's warnings array.
class AlignmentError : public std::runtime_error {
 public:
  enum class Reason {
    kInsufficientSamples,
    kDegenerateRelativeDepth,
    kNonPositiveScale,
  };

  AlignmentError(Reason reason, const std::string& message)
      : std::runtime_error(message), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

}  // namespace cammo
