#pragma once

#include <stdexcept>
#include <string>

namespace ekr {

// An argument violated a documented precondition (bad letters, mismatched
// shapes, malformed files, instances past the universe cap).
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A search stopped before covering its space; the partial result must never
// be certified.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ekr
