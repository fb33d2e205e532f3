#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace specturan {

/// Copy and copy-count arithmetic is done in 64-bit with explicit overflow
/// detection; an overflow throws instead of wrapping.
using count_t = std::uint64_t;

inline count_t checked_add(count_t a, count_t b) {
    count_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("count_t addition overflow");
    return r;
}

inline count_t checked_mul(count_t a, count_t b) {
    count_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("count_t multiplication overflow");
    return r;
}

inline count_t factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative value");
    count_t r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, static_cast<count_t>(i));
    return r;
}

/// n*(n-1)*...*(n-k+1)
inline count_t falling_factorial(int n, int k) {
    if (k < 0) throw std::invalid_argument("falling_factorial with k < 0");
    if (k > n) return 0;
    count_t r = 1;
    for (int i = 0; i < k; ++i) r = checked_mul(r, static_cast<count_t>(n - i));
    return r;
}

inline count_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<count_t>::max())
            throw std::overflow_error("binomial overflow");
    }
    return static_cast<count_t>(r);
}

/// Exact nonnegative rational, used to pass closed-form density values
/// through inequality checks without rounding.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den <= 0) throw std::invalid_argument("Rational with nonpositive denominator");
        if (num < 0) throw std::invalid_argument("Rational must be nonnegative");
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Parses "a/b", "a" or a decimal literal. Decimal input is converted with
/// denominator 10^digits so that values like "0.5" stay exact.
Rational parse_rational(const std::string& text);

}  // namespace specturan
