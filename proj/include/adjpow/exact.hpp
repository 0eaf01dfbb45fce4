#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace adjpow {

using ExactInteger = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

// Raised for inputs outside an operation's domain (negative indices, j > k,
// ranks outside the stable range, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive oracle is asked for more work than it allows.
class CostLimitError : public DomainError {
public:
    using DomainError::DomainError;
};

// A division that must be exact left a remainder. This always means a
// recurrence or formula is wrong, never that rounding is acceptable.
class ExactDivisionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Returns num / den, throwing ExactDivisionError if den does not divide num.
// `context` names the formula for the diagnostic.
ExactInteger exact_divide(const ExactInteger& num, const ExactInteger& den,
                          const char* context);

std::string to_string(const ExactInteger& value);

// Always "p/q" with q > 0, including integers ("3/1").
std::string to_string(const ExactRational& value);

}  // namespace adjpow
