#pragma once

#include <stdexcept>
#include <string>

namespace qesa {

// Parameters outside the domain of a closed form (gamma <= 0, beta = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke an input contract that is cheap to check (e.g. symmetry).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qesa
