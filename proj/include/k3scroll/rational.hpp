#pragma once

// Exact rational scalar used by every computation in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace k3scroll {

/// Arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Raised when a value the library asserts to be integral is not, or when an
/// internal cross-check between two computation paths fails.
class SelfCheckError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    const BigInt& num = boost::multiprecision::numerator(q);
    const BigInt& den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Narrow an integral rational to int64, throwing SelfCheckError when the
/// value is fractional or out of range.
inline std::int64_t to_int64(const Rational& q, const char* what = "value") {
    if (!is_integer(q)) {
        throw SelfCheckError(std::string(what) + " is not an integer: " + to_string(q));
    }
    const BigInt& num = boost::multiprecision::numerator(q);
    if (num > std::numeric_limits<std::int64_t>::max() ||
        num < std::numeric_limits<std::int64_t>::min()) {
        throw SelfCheckError(std::string(what) + " overflows int64: " + num.str());
    }
    return num.convert_to<std::int64_t>();
}

}  // namespace k3scroll
