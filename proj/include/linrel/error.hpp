#pragma once

#include <stdexcept>
#include <string>

namespace linrel {

// Operand sizes do not agree (vector lengths, ambient dimensions, space dims).
class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation was violated by the caller.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// One of the standing dual-pair hypotheses (h1, h2, k1, k2) required by an
// operation is false on the given instance.
class hypothesis_error : public precondition_error {
public:
    using precondition_error::precondition_error;
};

// Two independent computations disagreed. Always an implementation bug.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace linrel
