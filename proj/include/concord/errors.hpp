#pragma once
#include <stdexcept>
#include <string>

namespace concord {

// Bad user input (parse errors, domain violations). CLI maps these to exit 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency check failed (oracle disagreement, invariant broken).
// CLI maps these to exit 3; they always indicate a bug, never bad input.
struct check_error : std::runtime_error {
    explicit check_error(const std::string& what) : std::runtime_error(what) {}
};

inline void check(bool ok, const std::string& what) {
    if (!ok) throw check_error(what);
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw input_error(what);
}

} // namespace concord
