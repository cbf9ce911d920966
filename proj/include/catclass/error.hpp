#pragma once

#include <stdexcept>
#include <string>

namespace catclass {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent schema document.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Bad data file content. Carries the 1-based file line and the column name
/// when the problem can be pinned to a cell.
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(what) {}
  DataError(const std::string& what, std::size_t line, std::string column)
      : Error(what), line_(line), column_(std::move(column)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::size_t line_ = 0;
  std::string column_;
};

/// Model document problems: version, fingerprint or structure.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Precondition violated by a caller (bad argument values).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace catclass
