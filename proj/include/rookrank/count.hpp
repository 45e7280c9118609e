#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "error.hpp"

namespace rookrank {

// Nonnegative arbitrary-precision integer. Every rank, index and prefix count
// in this library is a Count; n = 21 already pushes factorials past 2^64, so
// there is no machine-word fast path. Subtraction that would go below zero
// throws std::domain_error.
class Count {
public:
    Count() = default;
    Count(int v) : v_(check_nonnegative(v)) {}
    Count(long v) : v_(check_nonnegative(v)) {}
    Count(unsigned int v) : v_(v) {}
    Count(unsigned long v) : v_(v) {}

    // Decimal digits only; rejects signs, whitespace and empty input.
    explicit Count(const std::string& decimal) {
        if (decimal.empty()) throw std::invalid_argument("Count: empty string");
        for (char ch : decimal)
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("Count: not a decimal number: " + decimal);
        v_ = mpz_class(decimal, 10);
    }

    Count& operator+=(const Count& o) {
        v_ += o.v_;
        return *this;
    }

    Count& operator-=(const Count& o) {
        if (v_ < o.v_) throw std::domain_error("Count: subtraction below zero");
        v_ -= o.v_;
        return *this;
    }

    Count& operator*=(const Count& o) {
        v_ *= o.v_;
        return *this;
    }

    friend Count operator+(Count a, const Count& b) { return a += b; }
    friend Count operator-(Count a, const Count& b) { return a -= b; }
    friend Count operator*(Count a, const Count& b) { return a *= b; }

    // Shift left by `bits` binary digits (multiply by 2^bits).
    friend Count operator<<(const Count& a, unsigned bits) {
        Count r;
        mpz_mul_2exp(r.v_.get_mpz_t(), a.v_.get_mpz_t(), bits);
        return r;
    }

    // Quotient of an exact division; throws std::logic_error on a remainder,
    // which signals a bug in the caller rather than bad user input.
    friend Count exact_div(const Count& a, const Count& b) {
        if (b.is_zero()) throw std::logic_error("exact_div: division by zero");
        Count q, r;
        mpz_tdiv_qr(q.v_.get_mpz_t(), r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        if (!r.is_zero()) throw std::logic_error("exact_div: not divisible");
        return q;
    }

    friend bool operator==(const Count& a, const Count& b) { return cmp(a.v_, b.v_) == 0; }

    friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
        const int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return sgn(v_) == 0; }

    // Number of binary digits; 0 for zero.
    std::size_t bit_length() const {
        if (is_zero()) return 0;
        return mpz_sizeinbase(v_.get_mpz_t(), 2);
    }

    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.v_; }

private:
    template <typename T>
    static T check_nonnegative(T v) {
        if (v < 0) throw std::invalid_argument("Count: negative value");
        return v;
    }

    mpz_class v_{0};
};

inline constexpr int factorial_argument_limit = 10000;

// k!, served from a monotone cache. The lock makes concurrent fills behave
// exactly like recomputation.
inline Count factorial(int k) {
    if (k < 0) throw std::invalid_argument("factorial: negative argument");
    if (k > factorial_argument_limit)
        throw capacity_error("factorial: argument " + std::to_string(k) + " exceeds limit " +
                             std::to_string(factorial_argument_limit));
    static std::mutex mutex;
    static std::vector<Count> cache{Count(1u)};
    std::scoped_lock lock(mutex);
    while (cache.size() <= static_cast<std::size_t>(k))
        cache.push_back(cache.back() * Count(static_cast<unsigned long>(cache.size())));
    return cache[static_cast<std::size_t>(k)];
}

// C(n, k); zero when k > n.
inline Count binomial(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return Count(0u);
    if (k > n - k) k = n - k;
    Count result(1u);
    for (int i = 1; i <= k; ++i) {
        result *= Count(static_cast<unsigned long>(n - k + i));
        result = exact_div(result, Count(static_cast<unsigned long>(i)));
    }
    return result;
}

}  // namespace rookrank
