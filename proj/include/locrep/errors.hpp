#pragma once

#include <stdexcept>
#include <string>

namespace locrep {

// Malformed textual input (words, quads, braids, family ids, group tables).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A substitution was asked to map a generator it has no image for.
class IncompleteSubstitution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation defined only on F_2 received a word with a generator index >= 3.
class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Braid/representation/presentation strand counts disagree.
class StrandMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition (valid quad, basis pair, ...) does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Consecutive path vertices are not joined by an edge of the graph.
class PathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Homomorphism enumeration would exceed the configured candidate budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact integer arithmetic left the representable range.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace locrep
