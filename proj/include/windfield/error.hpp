#pragma once

#include <stdexcept>

namespace windfield {

// Error taxonomy used across the toolkit:
//   IoError      file and format problems (bad magic, truncation, unwritable)
//   ValueError   invalid arguments or data values
//   ShapeError   dimension mismatches between tensors/layers
//   NumericError singular systems, degenerate inputs, diverging optimization
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ValueError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace windfield
