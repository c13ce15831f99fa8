#ifndef BASEPACK_RATIONAL_HPP
#define BASEPACK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

namespace basepack {

// Exact rational arithmetic for the desk-scale oracles.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den) {
    return Rational(BigInt(num), BigInt(den));
}

// "p/q", or just "p" for integers.
inline std::string rational_str(const Rational& r) {
    std::ostringstream out;
    if (denominator(r) == 1)
        out << numerator(r);
    else
        out << numerator(r) << '/' << denominator(r);
    return out.str();
}

inline double rational_double(const Rational& r) {
    return static_cast<double>(r);
}

}  // namespace basepack

#endif
