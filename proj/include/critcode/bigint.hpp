#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace critcode {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt bigpow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

}  // namespace critcode
