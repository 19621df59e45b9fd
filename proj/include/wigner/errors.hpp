// errors.hpp - exception types shared across the analysis layers.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wigner {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// P(given) = 0: conditional probability undefined for this law.
struct ZeroConditioningEvent : Error {
    using Error::Error;
};

// One of the interfering alternatives has probability zero.
struct DegenerateAlternatives : Error {
    using Error::Error;
};

// A frequency estimator has an empty denominator.
struct EmptyConditioningBranch : Error {
    using Error::Error;
};

class FormatError : public Error {
public:
    FormatError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct DuplicateRespondent : Error {
    using Error::Error;
};

}  // namespace wigner
