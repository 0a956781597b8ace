#ifndef RBLOCK_ERRORS_HPP
#define RBLOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rblock {

// Bad user-facing input (malformed lists, out-of-range labels, profile
// mismatches).  The CLI maps this to exit code 2.
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// A desk-scale guard refused to run (too many tilings / plane partitions).
// Also exit code 2 from the CLI; raise the limit explicitly to proceed.
class size_limit_error : public std::runtime_error {
public:
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Ring-integrity failure: an exact division or factor cancellation that the
// mathematics guarantees must succeed did not.  Always a bug, never an input
// problem.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace rblock

#endif
