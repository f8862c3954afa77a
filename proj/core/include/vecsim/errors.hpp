#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vecsim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input or parameter violates a documented invariant. Maps to CLI exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed file content. `offset` is the byte position where parsing stopped
/// (or the line number for line-oriented formats, see `is_line`).
class FormatError : public ValidationError {
 public:
  FormatError(const std::string& what, std::size_t offset, bool is_line = false)
      : ValidationError(what + (is_line ? " (line " : " (byte offset ") +
                        std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Payload ended before the header-declared size was read.
class TruncationError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// An operation that needs at least one sand cell got none.
class EmptyInputError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Filesystem failure: missing input, unwritable output. Maps to exit code 2.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace vecsim
