#pragma once

#include <stdexcept>

namespace qgrowth {

/// Input violates a documented shape, tableau, word, or permutation invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A letter lies outside [1, alphabet bound].
class LetterOutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An operation that needs a permutation received something else.
class NotAPermutation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace qgrowth
