#pragma once

#include <stdexcept>
#include <string>

namespace sg {

// Thrown when an exact routine is asked to run above its vertex cap.
struct SizeCapError : std::runtime_error {
    SizeCapError(const std::string& op, int n, int cap)
        : std::runtime_error(op + ": n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap)),
          n(n), cap(cap) {}
    int n;
    int cap;
};

// Malformed text input. position is a 1-based line (edge list) or byte offset (graph6).
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, long position)
        : std::runtime_error(what + " at " + std::to_string(position)), position(position) {}
    long position;
};

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void check_cap(const char* op, int n, int cap) {
    if (n > cap) throw SizeCapError(op, n, cap);
}

}  // namespace sg
