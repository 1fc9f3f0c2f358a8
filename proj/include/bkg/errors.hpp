#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bkg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter would overflow the native integer range (e.g. p^k - 1 >= 2^63).
struct OverflowError : Error {
    using Error::Error;
};

// Invalid or inconsistent input (non-prime modulus, bad divisibility, ...).
struct InvalidInputError : Error {
    using Error::Error;
};

// A configured work cap would be exceeded; carries the offending count.
struct CapExceededError : Error {
    CapExceededError(const std::string& what, std::uint64_t count)
        : Error(what), count(count) {}
    std::uint64_t count;
};

// No feasible answer exists for the request (e.g. no admissible prime).
struct InfeasibleError : Error {
    using Error::Error;
};

// A postcondition that must hold by construction failed; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace bkg
