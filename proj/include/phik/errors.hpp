#pragma once

#include <stdexcept>
#include <string>

namespace phik {

// Precondition violated by the caller (bad modulus, wrong parity of k, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration or table would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree exactly did not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace phik
