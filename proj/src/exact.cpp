#include "adjpow/exact.hpp"

namespace adjpow {

ExactInteger exact_divide(const ExactInteger& num, const ExactInteger& den,
                          const char* context) {
    if (den == 0) {
        throw ExactDivisionError(std::string(context) + ": division by zero");
    }
    ExactInteger quotient;
    ExactInteger remainder;
    boost::multiprecision::divide_qr(num, den, quotient, remainder);
    if (remainder != 0) {
        throw ExactDivisionError(std::string(context) + ": " + num.str() +
                                 " is not divisible by " + den.str() +
                                 " (remainder " + remainder.str() + ")");
    }
    return quotient;
}

std::string to_string(const ExactInteger& value) { return value.str(); }

std::string to_string(const ExactRational& value) {
    return to_string(boost::multiprecision::numerator(value)) + "/" +
           to_string(boost::multiprecision::denominator(value));
}

}  // namespace adjpow
