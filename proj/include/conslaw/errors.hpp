#pragma once

#include <stdexcept>
#include <string>

namespace conslaw {

// Raised by canonicalize() for expression trees outside the differential
// polynomial class (non-integer powers, division by non-constants).
struct UnsupportedExpression : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A Point is missing an assignment for a symbol of the expression under
// evaluation.
struct IncompletePoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An expression violates the leading-derivative bound demanded by its
// context (t-free for first-order systems, t-order < N for scalar form).
struct NotNormalForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input equations are not in Cauchy-Kovalevskaya form with respect to the
// declared leading variable.
struct NotCKForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAMultiplier : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedBase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyAnsatz : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotChainConsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) +
                             ", column " + std::to_string(col_) + ")"),
          line(line_),
          column(col_) {}
};

}  // namespace conslaw
