#pragma once

#include <stdexcept>
#include <string>

namespace metakit {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A leading coefficient or zero-test could not be decided at the available
// truncation precision.  Never silently guessed; callers must widen the
// working precision and retry.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

// Malformed or inconsistent user input (JSON datum, CLI flags, literals).
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

}  // namespace metakit
