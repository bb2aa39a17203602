#pragma once

#include <stdexcept>
#include <string>

namespace dtc {

// Raised on malformed input (bad tokens, loops, unknown labels). CLI exit 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation's precondition fails on well-formed data
// (no complete source, nonpure complex, cap exceeded). CLI exit 1.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dtc
