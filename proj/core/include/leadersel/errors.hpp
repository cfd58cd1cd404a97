#pragma once

#include <stdexcept>
#include <string>

namespace leadersel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph text or CLI arguments that do not describe a valid instance.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A follower block failed the pivot test, so it is not a valid grounded block.
class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue bisection ran out of its iteration budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// No source-to-target path exists within the hop budget.
class Unreachable : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search would exceed the candidate-set guard.
class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace leadersel
