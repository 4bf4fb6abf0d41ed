#ifndef QPDEG_ERRORS_HPP
#define QPDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qpdeg {

/// Invalid argument values (bad ranges, malformed inputs).
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Valid-looking input outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The level pair (n=0, k=1): E_1 never meets E_0, so no curve exists.
class excluded_pair_error : public argument_error {
 public:
  using argument_error::argument_error;
};

/// Operation defined for a different variant/family than the one given.
class not_applicable_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// A conic fit that is degenerate or has no real solution.
class fit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpdeg

#endif
