#pragma once

#include <stdexcept>
#include <string>

namespace dsrg {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape mismatch, zero dimension, or wrong order.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Requested matrix exceeds the configured capacity limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Row count not divisible by the requested block count.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// Row, column, or block index out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Block grid does not tile the target (overlap, gap, or span mismatch).
class LayoutError : public Error {
 public:
  using Error::Error;
};

/// Integer entry would not fit the storage width.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Adjacency matrix has a nonzero diagonal.
class LoopError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for the given parameter set.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Seed triple violates one of the construction equations; the message
/// names the violated condition.
class SeedContractError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix file; carries line/column where known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

/// Filesystem failure (open, read, write).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsrg
