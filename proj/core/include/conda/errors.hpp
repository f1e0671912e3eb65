#pragma once

#include <stdexcept>
#include <string>

namespace conda {

// Error taxonomy mirrors the CLI exit-code contract:
// ConfigError -> 1, DataError -> 2, NumericError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters, option ranges, unknown preset names.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed inputs: bad files, shape mismatches, rejected point clouds.
class DataError : public Error {
 public:
  using Error::Error;
};

// Non-finite values where finite ones are required.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace conda
