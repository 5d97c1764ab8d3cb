#pragma once

#include <stdexcept>
#include <string>

namespace intertwine {

/// Input violates a domain invariant (malformed complex, diagram, measure, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured search or enumeration budget was exhausted.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two facts about the same invariant have an empty intersection.
class Contradiction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace intertwine
