#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "commat/errors.hpp"

namespace commat {

/// Exact integer type for all ring coefficients. Multinomial coefficients in
/// the ybar-products grow quickly and their parity decides which terms
/// survive torsion reduction, so coefficients are never truncated.
using Int = boost::multiprecision::cpp_int;

inline Int factorial(long long n) {
    Int r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

/// i! / ((i-k)! (i-l)! (k+l-i)!), the coefficient of ybar_i in ybar_k*ybar_l.
inline Int y_product_coefficient(long long k, long long l, long long i) {
    if (i < std::max(k, l) || i > k + l) return 0;
    return factorial(i) / (factorial(i - k) * factorial(i - l) * factorial(k + l - i));
}

inline long long to_long_checked(const Int& x, const char* what) {
    if (x < std::numeric_limits<long long>::min() || x > std::numeric_limits<long long>::max())
        throw InvalidParameter(std::string(what) + ": value out of range");
    return static_cast<long long>(x);
}

/// Coefficients serialize as JSON numbers when they fit, decimal strings
/// otherwise.
inline nlohmann::json coeff_json(const Int& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

}  // namespace commat
