#pragma once

#include <stdexcept>
#include <string>

namespace piforge {

// Hard failure surfaced through the library boundary. The C API converts
// these into error codes + message; internal callers may catch and degrade.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

} // namespace piforge
