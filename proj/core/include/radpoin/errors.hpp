#pragma once

#include <stdexcept>
#include <string>

namespace radpoin {

// A hypothesis of the source inequality (or an argument domain) is violated.
// The CLI maps this to exit code 2.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Root finding, quadrature or tail extrapolation did not reach tolerance.
// The CLI maps this to exit code 3.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A jet was requested at a higher order than a function can supply.
class JetOrderError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace radpoin
