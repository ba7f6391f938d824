#pragma once

#include <stdexcept>
#include <string>

namespace hstar {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Contract violations: bad degrees, dimension mismatches, domain errors.
struct invalid_argument_error : error {
    explicit invalid_argument_error(const std::string& what) : error(what) {}
};

// Explicit budget violations (box volume, dimension caps). Never silent.
struct resource_error : error {
    explicit resource_error(const std::string& what) : error(what) {}
};

// Broken internal invariants (non-integral averages, negative h* coefficients).
// Indicates a bug, not bad input.
struct internal_error : error {
    explicit internal_error(const std::string& what) : error(what) {}
};

// A cross-check between two computation routes failed, or an orthant
// assembly did not reproduce its pieces.
struct verification_error : error {
    explicit verification_error(const std::string& what) : error(what) {}
};

}  // namespace hstar
