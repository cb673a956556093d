#pragma once

#include <stdexcept>

namespace loadcast {

// Input file or header does not match the expected schema.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Data violates a contract: empty after cleaning, degenerate sample,
// insufficient history, and the like.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested time window is not covered by the available data.
struct WindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical fitting or training failed (bracket failure, divergence).
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation called on an object in the wrong state (unfitted model, ...).
struct StateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File could not be read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace loadcast
