#pragma once

#include <stdexcept>
#include <string>

namespace umlat {

// Error taxonomy, mirrored by the CLI exit codes:
//   validation_error / window_error / cap_exceeded  -> exit 1
//   check failures are reported, not thrown          -> exit 2
//   assertion_error (internal invariant, with dump)  -> exit 3
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
    using Error::Error;
};

// An operation would leave the instance window (Laurent supports, ray
// lengths, building-window boundaries). Loud by design.
struct WindowError : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct ArithmeticError : Error {
    using Error::Error;
};

// A lemma conclusion failed at runtime. Carries a JSON state dump.
struct AssertionError : Error {
    std::string state;
    AssertionError(const std::string& msg, std::string state_json)
        : Error(msg), state(std::move(state_json)) {}
};

inline void lattice_assert(bool cond, const char* what, const std::string& state_json = "{}") {
    if (!cond) throw AssertionError(std::string("lattice assertion failed: ") + what, state_json);
}

}  // namespace umlat
