#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace mono {

// Exact rational coefficient field. cpp_rational keeps values in lowest
// terms with positive denominator, so every ring operation is exact.
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Scalar& s) {
    if (boost::multiprecision::denominator(s) == 1)
        return boost::multiprecision::numerator(s).str();
    return boost::multiprecision::numerator(s).str() + "/" +
           boost::multiprecision::denominator(s).str();
}

// Parses "p" or "p/q"; rejects q = 0 and malformed input.
std::optional<Scalar> parse_scalar(const std::string& text);

}  // namespace mono
