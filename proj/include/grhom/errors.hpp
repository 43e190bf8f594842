#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grhom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Degrees (or matrices) with a different number of parameters were combined.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A nonzero entry sits at (i, j) with rows[i] not below cols[j].
class GradingError : public Error {
 public:
  using Error::Error;
};

/// Invalid field characteristic or mixing matrices over different fields.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Degree arithmetic left the range of the coordinate type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside of its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configurable resource cap (e.g. oracle grid size) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Two algorithms that must agree returned different answers.
class CheckMismatch : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class FileError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  malformed,
  bad_header,
  bad_degree_arity,
  coeff_out_of_range,
  unsorted_rows,
  row_out_of_range,
  grading_violation,
  count_mismatch,
  unsupported_dimension,
  non_integer_grade,
};

const char* to_string(ParseErrorKind kind);

/// Input text could not be parsed. Carries the 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
             const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace grhom
