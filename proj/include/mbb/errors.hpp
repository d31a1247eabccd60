#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mbb {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfBounds : public Error {
 public:
  using Error::Error;
};

class DuplicateEdge : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class DepthLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when a wall-clock budget expires inside a search.
class Timeout : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class UnknownDataset : public Error {
 public:
  using Error::Error;
};

class NetworkError : public Error {
 public:
  using Error::Error;
};

/// Offline mode was requested and the dataset is not in the cache.
class NotCached : public NetworkError {
 public:
  using NetworkError::NetworkError;
};

class ChecksumMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace mbb
