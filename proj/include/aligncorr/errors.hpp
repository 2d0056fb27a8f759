#pragma once

#include <stdexcept>
#include <string>

namespace aligncorr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed or out-of-range input. The CLI maps these to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Raised when a computed structure violates an invariant that should hold
/// mathematically. The CLI maps these to exit code 2.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class InfiniteColength : public InputError {
 public:
  using InputError::InputError;
};

class SingularLinearPart : public InputError {
 public:
  using InputError::InputError;
};

class CutoffTooSmall : public InputError {
 public:
  using InputError::InputError;
};

class IncompatibleFlag : public InputError {
 public:
  using InputError::InputError;
};

class AmbientTooLarge : public InputError {
 public:
  using InputError::InputError;
};

class SearchSpaceTooLarge : public InputError {
 public:
  using InputError::InputError;
};

class InsufficientSamples : public InputError {
 public:
  using InputError::InputError;
};

class NonTransitiveRelation : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

class UnmatchedCoordinateShape : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

class RankDeficiency : public InconsistencyError {
 public:
  using InconsistencyError::InconsistencyError;
};

}  // namespace aligncorr
