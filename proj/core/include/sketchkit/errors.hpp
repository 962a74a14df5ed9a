#pragma once

#include <stdexcept>
#include <string>

namespace sketchkit {

/// File or stream could not be parsed into a matrix.
class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input matrix defeated the randomized process (e.g. augmentation
/// could not produce new directions after repeated redraws).
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sketchkit
