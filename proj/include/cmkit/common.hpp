#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmkit {

// Bad user input (files, CLI args, malformed presentations).  The CLI maps
// this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration abandoned because the explosion guard tripped.  Carries the
// estimate that tripped it; CLI maps this to exit code 3.
struct cap_exceeded : std::runtime_error {
    unsigned long long estimate;
    explicit cap_exceeded(unsigned long long est)
        : std::runtime_error("enumeration cap exceeded (estimated " +
                             std::to_string(est) + " results)"),
          estimate(est) {}
};

// Internal contract violations -> logic_error via this macro.
#define CMKIT_CHECK(cond, msg)                                                     \
    do {                                                                           \
        if (!(cond))                                                               \
            throw std::logic_error(std::string("internal error: ") + (msg) +       \
                                   " [" + __FILE__ + ":" + std::to_string(__LINE__) + "]"); \
    } while (0)

}  // namespace cmkit
