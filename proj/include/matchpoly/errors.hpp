#ifndef MATCHPOLY_ERRORS_HPP
#define MATCHPOLY_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matchpoly {

// Malformed input: bad family parameters, dimension mismatches, violated
// preconditions. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A time or work budget ran out. Carries a progress watermark so callers can
// emit partial telemetry. The CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::uint64_t work_done, double elapsed_seconds)
        : std::runtime_error(what), work_done(work_done), elapsed_seconds(elapsed_seconds) {}

    std::uint64_t work_done = 0;
    double elapsed_seconds = 0.0;
};

// Invariant breakage that indicates a bug rather than bad input (e.g. a
// negative h* coefficient). Never caught by the CLI.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace matchpoly

#endif
