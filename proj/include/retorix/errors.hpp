#pragma once

#include <stdexcept>
#include <string>

namespace retorix {

// Bad user input: invalid faces, mismatched shapes, unsatisfied preconditions.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration guard was exceeded (m > 64, rank > 24, nullity > 22, ...).
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency check failed; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace retorix
