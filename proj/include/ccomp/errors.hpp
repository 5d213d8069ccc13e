#pragma once

#include <stdexcept>
#include <string>

namespace ccomp {

// Caller broke a contract (mismatched fields, bad dimensions, invalid input).
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument("usage: " + what) {}
};

// The prime field has too few elements for the requested construction.
struct field_too_small_error : std::runtime_error {
    field_too_small_error(std::uint64_t required_, std::uint64_t modulus_)
        : std::runtime_error("field too small: need at least " + std::to_string(required_) +
                             " elements, modulus is " + std::to_string(modulus_)),
          required(required_),
          modulus(modulus_) {}
    std::uint64_t required;
    std::uint64_t modulus;
};

// Fewer responses than the decoder needs for its degree/corruption budget.
struct insufficient_responses_error : std::runtime_error {
    insufficient_responses_error(std::size_t needed, std::size_t got)
        : std::runtime_error("insufficient responses: need " + std::to_string(needed) + ", got " +
                             std::to_string(got)) {}
};

// Robust decoding could not produce a codeword within the corruption budget.
struct decoding_failure_error : std::runtime_error {
    explicit decoding_failure_error(const std::string& what)
        : std::runtime_error("decoding failure: " + what) {}
};

// Over-determined interpolation input disagrees with the fitted polynomial.
struct inconsistent_samples_error : std::runtime_error {
    explicit inconsistent_samples_error(const std::string& what)
        : std::runtime_error("inconsistent samples: " + what) {}
};

// An exact search was asked to exceed its enumeration budget.
struct budget_exceeded_error : std::runtime_error {
    explicit budget_exceeded_error(const std::string& what)
        : std::runtime_error("budget exceeded: " + what) {}
};

}  // namespace ccomp
