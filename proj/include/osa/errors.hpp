#pragma once

#include <stdexcept>
#include <string>

namespace osa {

// Thrown when an exact-DP request would blow past the desk-scale guard
// instead of silently running for hours.  CLI maps this to exit code 3.
struct ScaleGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File read/write failures, reported with path context.  CLI exit code 4.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace osa
