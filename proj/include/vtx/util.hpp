#pragma once

#include <stdexcept>
#include <sstream>
#include <string>

namespace vtx {

// Thrown when a pinned sign/side/normalization convention is detected to be
// inconsistent (divided power not dividing exactly, triangle identity failing,
// Specht dimension mismatch, ...).  These are fatal: they mean the build is
// wrong, not the input.
struct ConventionError : std::logic_error {
    explicit ConventionError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
inline void check_fail(const char* expr, const char* file, int line, const std::string& msg) {
    std::ostringstream os;
    os << "check failed: " << expr << " at " << file << ":" << line;
    if (!msg.empty()) os << " (" << msg << ")";
    throw std::logic_error(os.str());
}
} // namespace detail

} // namespace vtx

// Always-on invariant check (independent of NDEBUG); throws std::logic_error.
#define VTX_CHECK(expr, msg)                                                   \
    do {                                                                       \
        if (!(expr)) ::vtx::detail::check_fail(#expr, __FILE__, __LINE__, msg); \
    } while (0)
