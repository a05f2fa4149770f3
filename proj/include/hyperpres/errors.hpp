#ifndef HYPERPRES_ERRORS_HPP
#define HYPERPRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperpres {

/// Argument outside the operation's domain (zero divisor, unsorted vector, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller broke a documented precondition; the message carries the evidence.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A pinch move whose amount lies outside [0, half gap].
class InvalidMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation invoked on the wrong branch of the classification
/// (e.g. the degenerate classifier on a nondegenerate operator).
class WrongBranch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hyperpres

#endif  // HYPERPRES_ERRORS_HPP
