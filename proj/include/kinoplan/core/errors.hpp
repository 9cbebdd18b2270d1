#pragma once

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kinoplan {

/// Malformed scenario file or fragment.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Planning problem violates a construction invariant (invalid start state, ...).
struct InvalidProblemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Planner configuration rejected before the run starts.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Region decomposition would exceed the configured cell ceiling.
struct GridTooFineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Trajectory segment that cannot be costed (fewer than two samples, ...).
struct InvalidSegmentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

[[noreturn]] inline void invariant_failure(const char* expr, const char* file, int line,
                                           const std::string& msg) {
    std::fprintf(stderr, "kinoplan invariant violated: %s\n  at %s:%d\n  %s\n", expr, file,
                 line, msg.c_str());
    std::abort();
}

}  // namespace kinoplan

// Internal invariants abort: they indicate a bug, not a recoverable condition.
#define KINO_CHECK(cond, msg)                                                  \
    do {                                                                       \
        if (!(cond)) ::kinoplan::invariant_failure(#cond, __FILE__, __LINE__, (msg)); \
    } while (0)
