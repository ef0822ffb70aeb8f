#pragma once

#include <stdexcept>
#include <string>

namespace f1tits {

// Base of every error raised by a computation on well-formed input.
struct ComputationError : std::runtime_error {
    std::string kind;
    ComputationError(std::string k, const std::string& what)
        : std::runtime_error(what), kind(std::move(k)) {}
};

// Malformed input (bad presentation, parse failure, bad selector).
struct InputError : std::invalid_argument {
    std::string kind;
    InputError(std::string k, const std::string& what)
        : std::invalid_argument(what), kind(std::move(k)) {}
};

inline ComputationError cap_exceeded(const std::string& what) { return {"cap_exceeded", what}; }
inline ComputationError undecidable(const std::string& what) { return {"undecidable", what}; }
inline ComputationError unsupported(const std::string& what) { return {"unsupported", what}; }
inline ComputationError law_does_not_descend(const std::string& what) {
    return {"law_does_not_descend", what};
}

}  // namespace f1tits
